from ._tv4q import (
    Triangulation,
    check_closed,
    homology,
    lens_space,
    pachner_23,
    parse,
    tv_r,
    tv4,
    tv4_bruteforce,
)

__all__ = [
    "Triangulation",
    "check_closed",
    "homology",
    "lens_space",
    "pachner_23",
    "parse",
    "tv_r",
    "tv4",
    "tv4_bruteforce",
]
