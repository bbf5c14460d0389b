"""JSON forms shared by the CLI and the reports.

Tableaux are arrays of rows, partitions and permutations are integer arrays,
words are 0/1 strings, chains are arrays of ``[lo, hi]`` pairs and rational
matrices are arrays of ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from . import linalg
from .cellmodule import CellModule
from .gt import BasisFamily, TransitionMatrix
from .perms import Interval, ParabolicChain, check_permutation
from .tableaux import Tableau, check_partition, check_word


def tableau_to_json(t: Tableau) -> list[list[int]]:
    return t.to_list()


def tableau_from_json(data: Sequence[Sequence[int]]) -> Tableau:
    return Tableau.of(data)


def parse_tableau(text: str) -> Tableau:
    """``"1,2,4/3,5"`` or a JSON array of rows."""
    text = text.strip()
    if text.startswith("["):
        return tableau_from_json(json.loads(text))
    return Tableau.of([int(x) for x in row.split(",") if x.strip()] for row in text.split("/"))


def parse_shape(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("["):
        return check_partition(json.loads(text))
    return check_partition(int(x) for x in text.split(",") if x.strip())


def matrix_to_json(m: Sequence[Sequence[Any]]) -> list[list[str]]:
    return [[linalg.format_number(x) for x in row] for row in m]


def matrix_from_json(data: Sequence[Sequence[str]]) -> list[list]:
    return [[linalg.parse_number(x) for x in row] for row in data]


def chain_to_json(chain: ParabolicChain) -> dict:
    return {"word": chain.word, "intervals": chain.to_list()}


def chain_from_json(data: dict) -> ParabolicChain:
    return ParabolicChain(tuple(Interval(lo, hi) for lo, hi in data["intervals"]), check_word(data["word"]))


def permutation_to_json(w: Sequence[int]) -> list[int]:
    return list(w)


def permutation_from_json(data: Sequence[int]) -> tuple[int, ...]:
    return check_permutation(data)


def module_to_json(module: CellModule) -> dict:
    return {
        "shape": list(module.shape),
        "basis": [t.to_list() for t in module.basis],
        "generators": {str(k): matrix_to_json(g) for k, g in sorted(module.gens.items())},
    }


def family_to_json(family: BasisFamily, order: Sequence[Tableau] | None = None) -> dict:
    keys = list(order) if order is not None else list(family.vectors)
    return {
        "shape": list(family.shape),
        "word": family.word,
        "vectors": [[t.to_list(), [linalg.format_number(x) for x in family.vectors[t]]] for t in keys],
    }


def transition_to_json(tm: TransitionMatrix) -> dict:
    return tm.to_dict()


def transition_from_json(data: dict) -> dict:
    """Decode a serialized transition matrix into tableaux and exact numbers."""
    return {
        "shape": check_partition(data["shape"]),
        "word": check_word(data["word"]),
        "order": [Tableau.of(t) for t in data["order"]],
        "phi": {Tableau.of(a): Tableau.of(b) for a, b in data["phi"]},
        "entries": matrix_from_json(data["entries"]),
    }
