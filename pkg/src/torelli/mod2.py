"""Sp(2g, Z/2): closed-form orders, brute-force enumeration and form orbits.

Group elements are packed into one unsigned 64-bit integer: column j of the
matrix (the image of basis vector j, as a 2g-bit word with bit i = row i)
occupies bits ``[2g*j, 2g*(j+1))``.  For g = 3 that is 36 bits.

Enumeration is a breadth-first closure from mod-2 transvections, vectorized
over whole generation levels; the sorted result is cached on disk.
"""
from __future__ import annotations

import hashlib
import logging
import os
import struct
import warnings
from math import factorial
from pathlib import Path

import numpy as np

from .errors import CacheError, ResourceError
from .quadratic import SpQuadraticForm, arf_standard, evaluate

log = logging.getLogger(__name__)

MAX_ENUMERATION_GENUS = 3
CACHE_MAGIC = b"TORSPMD2"
CACHE_VERSION = 1
_HEADER = struct.Struct("<8sIIQ32s")


def sp_order_mod2(g: int) -> int:
    if g < 1:
        raise ValueError("genus must be at least 1")
    out = 2 ** (g * g)
    for i in range(1, g + 1):
        out *= 2 ** (2 * i) - 1
    return out


def hyperelliptic_orbit_count(g: int) -> int:
    """|Sp(2g, Z/2)| / (2g + 2)!, the number of Torelli orbits of hyperelliptic involutions."""
    if g < 3:
        warnings.warn(f"orbit-count formula is only valid for g >= 3 (got g = {g})", stacklevel=2)
    num, den = sp_order_mod2(g), factorial(2 * g + 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


# ---------------------------------------------------------------- packing

def pack(matrix) -> int:
    n = len(matrix)
    code = 0
    for j in range(n):
        col = sum((int(matrix[i][j]) & 1) << i for i in range(n))
        code |= col << (n * j)
    return code


def unpack(code: int, g: int) -> tuple[tuple[int, ...], ...]:
    n = 2 * g
    cols = [(int(code) >> (n * j)) & ((1 << n) - 1) for j in range(n)]
    return tuple(tuple((cols[j] >> i) & 1 for j in range(n)) for i in range(n))


def _swap_pairs(v: int, g: int) -> int:
    """Exchange the a_i and b_i bits, so that v . w = parity(swap(v) & w) mod 2."""
    out = 0
    for i in range(g):
        out |= ((v >> (2 * i)) & 1) << (2 * i + 1)
        out |= ((v >> (2 * i + 1)) & 1) << (2 * i)
    return out


def generator_vectors(g: int) -> list[int]:
    """Transvection vectors a_i, b_i and a_i + a_{i+1} as bit words."""
    vs = []
    for i in range(g):
        vs.append(1 << (2 * i))
        vs.append(1 << (2 * i + 1))
    for i in range(g - 1):
        vs.append((1 << (2 * i)) | (1 << (2 * i + 2)))
    return vs


def transvection_mod2(v: int, g: int) -> int:
    n = 2 * g
    sv = _swap_pairs(v, g)
    code = 0
    for j in range(n):
        c = 1 << j
        if bin(c & sv).count("1") & 1:
            c ^= v
        code |= c << (n * j)
    return code


def _parity_table(n: int) -> np.ndarray:
    return np.array([bin(k).count("1") & 1 for k in range(1 << n)], dtype=np.uint64)


def _left_multiply(codes: np.ndarray, v: int, g: int, parity: np.ndarray) -> np.ndarray:
    """T_v @ M for every packed M in ``codes``."""
    n = 2 * g
    mask = np.uint64((1 << n) - 1)
    sv = np.uint64(_swap_pairs(v, g))
    vv = np.uint64(v)
    out = np.zeros_like(codes)
    for j in range(n):
        shift = np.uint64(n * j)
        col = (codes >> shift) & mask
        col = col ^ (parity[col & sv] * vv)
        out |= col << shift
    return out


def identity_code(g: int) -> int:
    n = 2 * g
    return sum((1 << j) << (n * j) for j in range(n))


def enumerate_sp_mod2_uncached(g: int) -> np.ndarray:
    """Sorted packed codes of all of Sp(2g, Z/2) by breadth-first closure."""
    if g > MAX_ENUMERATION_GENUS:
        raise ResourceError(f"enumeration of Sp({2 * g}, Z/2) is out of reach")
    if g < 1:
        raise ValueError("genus must be at least 1")
    parity = _parity_table(2 * g)
    gens = generator_vectors(g)
    seen = np.array([identity_code(g)], dtype=np.uint64)
    frontier = seen
    level = 0
    while frontier.size:
        images = np.unique(np.concatenate([_left_multiply(frontier, v, g, parity) for v in gens]))
        frontier = images[~np.isin(images, seen, assume_unique=True)]
        seen = np.union1d(seen, frontier)
        level += 1
        log.debug("level %d: %d new, %d total", level, frontier.size, seen.size)
    return seen


# ---------------------------------------------------------------- cache

def cache_dir() -> Path:
    root = os.environ.get("TORELLI_CACHE_DIR")
    return Path(root) if root else Path.home() / ".cache" / "torelli"


def cache_path(g: int, directory: Path | None = None) -> Path:
    return Path(directory or cache_dir()) / f"sp{2 * g}_mod2.v{CACHE_VERSION}.bin"


def write_cache(path: Path, g: int, codes: np.ndarray) -> None:
    payload = np.ascontiguousarray(codes, dtype="<u8").tobytes()
    header = _HEADER.pack(CACHE_MAGIC, CACHE_VERSION, g, codes.size, hashlib.sha256(payload).digest())
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(header + payload)
    tmp.replace(path)


def read_cache(path: Path, g: int) -> np.ndarray:
    """Load a cache file, raising :class:`CacheError` on any mismatch."""
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise CacheError("truncated header")
    magic, version, cg, count, digest = _HEADER.unpack_from(data)
    if magic != CACHE_MAGIC:
        raise CacheError("bad magic")
    if version != CACHE_VERSION:
        raise CacheError(f"cache version {version}, expected {CACHE_VERSION}")
    if cg != g:
        raise CacheError(f"cache holds g = {cg}, expected {g}")
    payload = data[_HEADER.size:]
    if len(payload) != 8 * count or count != sp_order_mod2(g):
        raise CacheError("element count mismatch")
    if hashlib.sha256(payload).digest() != digest:
        raise CacheError("checksum mismatch")
    return np.frombuffer(payload, dtype="<u8").astype(np.uint64)


def enumerate_sp_mod2(g: int, directory: Path | None = None, use_cache: bool = True) -> np.ndarray:
    """All elements of Sp(2g, Z/2) as sorted packed codes, cached on disk.

    An absent, corrupted or out-of-version cache file is regenerated.
    """
    codes, _ = load_or_build(g, directory, use_cache)
    return codes


def load_or_build(g: int, directory: Path | None = None,
                  use_cache: bool = True) -> tuple[np.ndarray, str]:
    if g > MAX_ENUMERATION_GENUS:
        raise ResourceError(f"enumeration of Sp({2 * g}, Z/2) is out of reach")
    if not use_cache:
        return enumerate_sp_mod2_uncached(g), "built"
    path = cache_path(g, directory)
    status = "built"
    if path.exists():
        try:
            return read_cache(path, g), "loaded"
        except CacheError as exc:
            log.warning("discarding cache %s: %s", path, exc)
            status = "rebuilt"
    codes = enumerate_sp_mod2_uncached(g)
    try:
        write_cache(path, g, codes)
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    return codes, status


# ---------------------------------------------------------------- forms

def act_on_form(code: int, form: SpQuadraticForm) -> SpQuadraticForm:
    """(M . w)(x) = w(M^{-1} x) for a packed group element M."""
    g = form.genus
    m = unpack(code, g)
    minv = unpack(_inverse_code(code, g), g)
    cols = [tuple(minv[i][k] for i in range(2 * g)) for k in range(2 * g)]
    return SpQuadraticForm(tuple(evaluate(form, c) for c in cols))


def _inverse_code(code: int, g: int) -> int:
    """M^{-1} = J^{-1} M^T J over Z/2, where J^{-1} = J mod 2."""
    n = 2 * g
    m = unpack(code, g)
    # (J M^T J)[i][k] = M[k^1][i^1] with the index pairing a_i <-> b_i
    return pack(tuple(tuple(m[k ^ 1][i ^ 1] for k in range(n)) for i in range(n)))


def _orbits_from_generators(g: int) -> list[list[int]]:
    n_forms = 1 << (2 * g)
    gens = [transvection_mod2(v, g) for v in generator_vectors(g)]
    images = []
    for code in gens:
        images.append([act_on_form(code, SpQuadraticForm.from_int(f, g)).as_int()
                       for f in range(n_forms)])
    label = [-1] * n_forms
    orbits = []
    for start in range(n_forms):
        if label[start] >= 0:
            continue
        orbit = [start]
        label[start] = len(orbits)
        for f in orbit:
            for img in images:
                h = img[f]
                if label[h] < 0:
                    label[h] = len(orbits)
                    orbit.append(h)
        orbits.append(sorted(orbit))
    return orbits


def form_orbit_of(form: SpQuadraticForm, group: np.ndarray) -> np.ndarray:
    """Sorted codes of {w o M : M in group}, evaluated on the whole store at once.

    Since the store is a group, this is the orbit of w.
    """
    g = form.genus
    n = 2 * g
    table = np.array([evaluate(form, [(c >> i) & 1 for i in range(n)]) for c in range(1 << n)],
                     dtype=np.uint64)
    mask = np.uint64((1 << n) - 1)
    out = np.zeros_like(group)
    for j in range(n):
        col = (group >> np.uint64(n * j)) & mask
        out |= table[col] << np.uint64(j)
    return np.unique(out)


def form_orbits(g: int, group: np.ndarray | None = None) -> list[list[int]]:
    """Orbits of Sp(2g, Z/2) on the 2^{2g} forms, as sorted lists of form codes.

    With ``group`` (a full enumeration) every orbit is computed by acting
    with all elements; otherwise by closure under the transvection
    generators.
    """
    if group is None:
        return _orbits_from_generators(g)
    remaining = set(range(1 << (2 * g)))
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = [int(c) for c in form_orbit_of(SpQuadraticForm.from_int(start, g), group)]
        orbits.append(orbit)
        remaining.difference_update(orbit)
    return orbits


def form_orbit_census(g: int, group: np.ndarray | None = None) -> dict[int, int]:
    """Orbit size for each Arf value; raises if an Arf class is not a single orbit."""
    census: dict[int, int] = {}
    for orbit in form_orbits(g, group):
        arfs = {arf_standard(SpQuadraticForm.from_int(c, g)) for c in orbit}
        if len(arfs) != 1:
            raise ArithmeticError("an orbit mixes Arf invariants")
        (value,) = arfs
        if value in census:
            raise ArithmeticError(f"Arf-{value} forms split into several orbits")
        census[value] = len(orbit)
    return dict(sorted(census.items()))
