"""JSON matrix formats.

Complex matrix:   {"rows": R, "cols": C, "entries": [[[re, im], ...], ...]}
Block instance:   {"m": M, "n": N, "matrix": {...}}
Integer matrix:   {"rows": R, "cols": C, "entries": [[int, ...], ...]}
Gram pair:        {"pair": [matrix, matrix]}

Floats round-trip losslessly: json emits shortest-round-trip decimals and
binary64 parses back exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .blocks import BlockMatrix


def matrix_to_obj(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def matrix_from_obj(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = obj["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("entries shape does not match rows/cols")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(entries):
        for j, cell in enumerate(row):
            re, im = cell
            out[i, j] = complex(re, im)
    return out


def int_matrix_to_obj(a: np.ndarray) -> dict:
    a = np.asarray(a)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": [[int(v) for v in row] for row in a],
    }


def int_matrix_from_obj(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = obj["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("entries shape does not match rows/cols")
    return np.array([[int(v) for v in row] for row in entries], dtype=np.int64)


def block_to_obj(a: BlockMatrix) -> dict:
    return {"m": a.m, "n": a.n, "matrix": matrix_to_obj(a.dense)}


def block_from_obj(obj: dict) -> BlockMatrix:
    return BlockMatrix(int(obj["m"]), int(obj["n"]), matrix_from_obj(obj["matrix"]))


def pair_to_obj(pair) -> dict:
    m, n = pair
    return {"pair": [matrix_to_obj(m), matrix_to_obj(n)]}


def pair_from_obj(obj: dict):
    a, b = obj["pair"]
    return matrix_from_obj(a), matrix_from_obj(b)


def dump(obj: dict, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
