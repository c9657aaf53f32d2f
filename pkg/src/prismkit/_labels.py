"""Deterministic rendering and ordering of opaque labels."""

from __future__ import annotations

from typing import Hashable


def label_str(label: Hashable) -> str:
    # frozenset iteration order depends on the hash seed, so sort members
    if isinstance(label, (frozenset, set)):
        return "{" + ",".join(sorted(label_str(x) for x in label)) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(label_str(x) for x in label) + ")"
    return str(label)


def label_key(label: Hashable) -> tuple:
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label, "")
    return (1, 0, label_str(label))


def sorted_labels(labels) -> list:
    return sorted(labels, key=label_key)
