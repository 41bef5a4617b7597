"""Small named relations with known completions, used by tests and demos.

Neighbourhoods are written 1-based, as in compact set notation.
"""

from __future__ import annotations

from .relation import BinaryRelation


def _rel(*neighborhoods):
    return BinaryRelation.from_neighborhoods(neighborhoods, one_based=True)


#: three points; RS = DM(RS) is isomorphic to 2 x 3, a regular double Stone algebra
TWO_BY_THREE = _rel({1, 2, 3}, {2}, {1, 3})

#: four points; RS = DM(RS) is distributive with ten elements but not Stone
DISTRIBUTIVE_TEN = _rel({1, 2}, {1, 2, 3}, {3}, {1, 3, 4})

#: four points; the upper family has the single atom {1}, so DM(RS) is Stone but not regular
STONE_NOT_REGULAR = _rel({1, 2, 3, 4}, {2, 3}, {2, 3, 4}, {3, 4})

#: four points; the sets {x}▲ form an irredundant covering and DM(RS) is 2 x 2 x 3
TWO_BY_TWO_BY_THREE = _rel({1, 2, 3, 4}, {1, 2}, {3}, {4})

NAMED = {
    "two_by_three": TWO_BY_THREE,
    "distributive_ten": DISTRIBUTIVE_TEN,
    "stone_not_regular": STONE_NOT_REGULAR,
    "two_by_two_by_three": TWO_BY_TWO_BY_THREE,
}
