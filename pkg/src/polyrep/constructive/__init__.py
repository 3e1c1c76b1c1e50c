"""Explicit representations that follow the universality arguments branch by branch."""

from .large import (
    GraphWalkEntry,
    guy_lower,
    large_shape,
    represent_k1_k3,
    represent_exceptional,
    represent_repeat_large,
    split_large,
    walk_args,
    walk_entries,
)
from .quaternary import multiple_args, quaternary, represent_multiple, solve_quaternary
from .r1 import r1_branch, represent_r1
from .shaped import ShapedRepresentation
from .small import represent_repeat_small, small_domain_ok, small_shape, small_total

__all__ = [
    "GraphWalkEntry",
    "ShapedRepresentation",
    "guy_lower",
    "large_shape",
    "represent_k1_k3",
    "represent_exceptional",
    "multiple_args",
    "quaternary",
    "r1_branch",
    "represent_multiple",
    "represent_r1",
    "represent_repeat_large",
    "represent_repeat_small",
    "small_domain_ok",
    "small_shape",
    "small_total",
    "solve_quaternary",
    "split_large",
    "walk_args",
    "walk_entries",
]
