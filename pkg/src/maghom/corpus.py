"""Built-in torsion corpus and named example graphs.

Cell structures are stored as codimension-one faces (``cell: "face face ..."``),
transcribed from Hasse diagram drawings; 0-cells are the cells that appear
only as faces.  See ``CORPUS.md`` next to this file for the reading choices.
"""

from __future__ import annotations

from .graphs import Graph
from .posets import Poset, RegularCW, build_pk_sigma, cycle_to_oneline, face_poset

_RP2 = {
    "01": "a_0 a_1",
    "02": "a_0 a_2",
    "03": "a_0 a_3",
    "04": "a_0 a_4",
    "05": "a_0 a_5",
    "12": "a_1 a_2",
    "13": "a_1 a_3",
    "14": "a_1 a_4",
    "15": "a_1 a_5",
    "23": "a_2 a_3",
    "24": "a_2 a_4",
    "25": "a_2 a_5",
    "34": "a_3 a_4",
    "35": "a_3 a_5",
    "45": "a_4 a_5",
    "013": "01 03 13",
    "015": "01 05 15",
    "023": "02 03 23",
    "024": "02 04 24",
    "045": "04 05 45",
    "124": "12 14 24",
    "125": "12 15 25",
    "134": "13 14 34",
    "235": "23 25 35",
    "345": "34 35 45",
}

_MOORE_Z3 = {
    "01": "0 1",
    "02": "0 2",
    "03": "0 1",
    "04": "0 2",
    "05": "0 1",
    "06": "0 2",
    "12": "1 2",
    "23": "1 2",
    "102": "01 02 12",
    "106": "01 06 23",
    "203": "02 03 23",
    "304": "03 04 12",
    "405": "04 05 23",
    "506": "05 06 12",
}

_MOORE_Z5 = {
    "01": "0 1",
    "02": "0 2",
    "03": "0 1",
    "04": "0 2",
    "05": "0 1",
    "06": "0 2",
    "07": "0 1",
    "08": "0 2",
    "09": "0 1",
    "12": "1 2",
    "23": "1 2",
    "010": "0 2",
    "102": "01 02 12",
    "203": "02 03 23",
    "304": "03 04 12",
    "405": "04 05 23",
    "506": "05 06 12",
    "607": "06 07 23",
    "708": "07 08 12",
    "809": "08 09 23",
    "1010": "01 23 010",
    "9010": "09 12 010",
}

_LENS_3_1_AS_DRAWN = {
    "01": "0 1",
    "02": "0 2",
    "03": "0 1",
    "04": "0 2",
    "05": "0 1",
    "06": "0 2",
    "07": "0 7",
    "08": "0 7",
    "12": "1 2",
    "17": "1 7",
    "23": "1 2",
    "27": "2 7",
    "37": "1 7",
    "47": "2 7",
    "57": "1 7",
    "67": "2 7",
    "102": "01 12",
    "106": "06 23",
    "107": "01 07 17",
    "108": "01 08 17 57",
    "127": "12 17 27",
    "167": "17 23 67",
    "203": "02 23",
    "207": "02 07 27",
    "208": "02 08 27 67",
    "237": "23 27 37",
    "304": "03 12",
    "307": "03 07 37",
    "308": "03 08 17 37",
    "347": "12 37 47",
    "405": "04 23",
    "407": "04 07 47",
    "408": "04 08 27 47",
    "457": "23 47 57",
    "506": "05 12",
    "507": "05 07 57",
    "508": "05 08 37 57",
    "567": "12 57 67",
    "607": "06 07 67",
    "608": "06 08 47 67",
    "1027": "102 107 127 207",
    "1028": "102 108 208 567",
    "1067": "106 107 167 607",
    "1068": "106 108 457 608",
    "2037": "203 207 237 307",
    "2038": "167 203 208 308",
    "3047": "304 307 347 407",
    "3048": "127 304 308 408",
    "4057": "405 407 457 507",
    "4058": "237 405 408 508",
    "5067": "506 507 567 607",
    "5068": "347 506 508 608",
}

# Two drawing slips in the lens space diagram, fixed so the complex is regular
# and closed: each equatorial 2-cell x0y also bounds on the radial edge 0y, and
# each lower radial 2-cell x08 meets the south pole along (x+4)7, not x7.
LENS_3_1_ADDED = (("02", "102"), ("03", "203"), ("04", "304"), ("05", "405"), ("06", "506"), ("01", "106"))
LENS_3_1_REMOVED = (("17", "108"), ("27", "208"), ("37", "308"), ("47", "408"), ("57", "508"), ("67", "608"))

PK_SIGMA_4 = dict(k=4, sigma=cycle_to_oneline([(1, 2, 3)], 3),
                  blocks=[[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]])
PK_SIGMA_6 = dict(k=6, sigma=cycle_to_oneline([(2, 1, 3, 4, 5)], 5),
                  blocks=[[(1, 2), (3, 5), (4, 6)], [(1, 3), (2, 4), (5, 6)], [(1, 4), (2, 5), (3, 6)],
                          [(1, 5), (2, 6), (3, 4)], [(1, 6), (2, 3), (4, 5)]])

_CW_DATA = {
    "rp2": _RP2,
    "moore_z3": _MOORE_Z3,
    "moore_z5": _MOORE_Z5,
    "lens_3_1_as_drawn": _LENS_3_1_AS_DRAWN,
}

CORPUS_NAMES = ("rp2", "moore_z3", "moore_z5", "lens_3_1", "pk_sigma_4", "pk_sigma_6")


def _faces(data: dict) -> dict:
    return {cell: tuple(spec.split()) for cell, spec in data.items()}


def _lens_faces() -> dict:
    faces = {c: list(fs) for c, fs in _faces(_LENS_3_1_AS_DRAWN).items()}
    for f, c in LENS_3_1_ADDED:
        faces[c].append(f)
    for f, c in LENS_3_1_REMOVED:
        faces[c].remove(f)
    return faces


def corpus_cw(name: str) -> RegularCW:
    """Cell structure of a corpus space ("lens_3_1" is the corrected reading)."""
    if name == "lens_3_1":
        return RegularCW.from_faces(_lens_faces())
    try:
        return RegularCW.from_faces(_faces(_CW_DATA[name]))
    except KeyError:
        raise ValueError(f"unknown corpus entry {name!r}; expected one of {CORPUS_NAMES}") from None


def corpus(name: str) -> Poset:
    """Corpus poset without bounds adjoined."""
    if name == "pk_sigma_4":
        return build_pk_sigma(**PK_SIGMA_4)
    if name == "pk_sigma_6":
        return build_pk_sigma(**PK_SIGMA_6)
    return face_poset(corpus_cw(name))


# --- named graphs ---------------------------------------------------------------

def pendant_triangle() -> Graph:
    """Triangle 1-2-3 with pendants 4 and 5 on vertex 3."""
    return Graph.from_labelled_edges([1, 2, 3, 4, 5], [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)])


def whitney_h() -> Graph:
    """Both pendants on one triangle vertex (the same graph as ``pendant_triangle``)."""
    return pendant_triangle()


def whitney_k() -> Graph:
    """Whitney twist of ``whitney_h``: the pendants sit on different triangle vertices."""
    return Graph.from_labelled_edges([1, 2, 3, 4, 5], [(1, 2), (1, 3), (2, 3), (1, 4), (3, 5)])


NAMED_GRAPHS = {"pendant_triangle": pendant_triangle, "whitney_h": whitney_h, "whitney_k": whitney_k}
