"""Constructive maps between avoidance classes and simpler objects.

Nine catalogued classes have the property that the descent word determines
the member uniquely, so every class-to-class map here goes through the word
as a pivot: read the word off the source, rebuild in the target.  The word
shapes the three families admit differ:

- the four pair classes around {132,213} admit every ballot word;
- the {132,213,312} family admits words whose descents form a suffix
  (U^a D^b);
- the {132,213,321} family admits words with at most one descent
  (U^a D U^b or all U).

The remaining maps are the insertion bijections onto plain avoider sets, the
excluded-element construction, the two recursive generators, and the
explicit members of the always-small classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import InvalidInputError, UnrealizableWordError, UnsupportedClassError
from .patterns import PatternSet, canonical_pattern_set, find_occurrence, format_pattern_set
from .perms import (
    Perm,
    check_step_word,
    descent_word,
    direct_sum,
    identity,
    is_ballot,
    is_ballot_word,
    reverse,
    skew_sum,
    standardize,
)


@dataclass(frozen=True)
class WilfFamily:
    """Classes whose members correspond word-for-word to each other."""

    members: tuple[str, ...]
    canonical_member: str


DESCENT_WORD_FAMILIES: tuple[WilfFamily, ...] = (
    WilfFamily(("132,213", "132,312", "213,231", "231,312"), "132,213"),
    WilfFamily(("132,213,312", "213,231,312"), "132,213,312"),
    WilfFamily(("132,213,321", "132,312,321", "213,231,321"), "132,213,321"),
)


def _family_of(name: str) -> WilfFamily | None:
    for family in DESCENT_WORD_FAMILIES:
        if name in family.members:
            return family
    return None


def _require_member(p: Perm, pset: PatternSet, where: str) -> None:
    if not is_ballot(p):
        raise InvalidInputError(f"{where}: {p} is not a ballot permutation")
    for q in pset:
        witness = find_occurrence(p, q)
        if witness is not None:
            pattern = "".join(str(v) for v in q)
            raise InvalidInputError(
                f"{where}: {p} contains {pattern} at positions {witness}"
            )


def _u_runs(w: str) -> list[int]:
    """Lengths of the maximal U-runs delimited by each D (one run per split slot)."""
    return [len(run) for run in w.split("D")]


def _from_word_132_213(w: str) -> Perm:
    blocks = [identity(r + 1) for r in _u_runs(w)]
    return reduce(skew_sum, blocks)


def _from_word_213_231(w: str) -> Perm:
    runs = _u_runs(w)
    n = len(w) + 1
    out: list[int] = []
    nxt = 1
    for i, r in enumerate(runs):
        out.extend(range(nxt, nxt + r))
        nxt += r
        out.append(n - i)  # a fresh maximum closes each block
    return tuple(out)


def _from_word_231_312(w: str) -> Perm:
    if not w:
        return (1,)
    blocks: list[Perm] = [(1,)]
    i = 0
    while i < len(w):
        j = i + 1
        while j < len(w) and w[j] == "D":
            j += 1
        blocks.append(reverse(identity(j - i)))
        i = j
    return reduce(direct_sum, blocks)


def _from_word_132_312(w: str) -> Perm:
    runs = _u_runs(w)
    m = len(runs)
    out: list[int] = []
    climb = m  # values 1..m-1 are reserved for the positions after each descent
    for i, r in enumerate(runs):
        width = r + 1 if i == 0 else r
        for _ in range(width):
            out.append(climb)
            climb += 1
        if i < m - 1:
            out.append(m - 1 - i)
    return tuple(out)


def _split_single_descent(w: str) -> tuple[int, int]:
    a = w.index("D")
    return a, len(w) - a - 1


def _from_word_132_213_312(w: str) -> Perm:
    a = w.count("U")
    return skew_sum(identity(a + 1), reverse(identity(len(w) - a)))


def _from_word_213_231_312(w: str) -> Perm:
    a = w.count("U")
    b = len(w) - a
    if b == 0:
        return identity(a + 1)
    return direct_sum(identity(a), reverse(identity(b + 1)))


def _from_word_132_213_321(w: str) -> Perm:
    if "D" not in w:
        return identity(len(w) + 1)
    a, b = _split_single_descent(w)
    return skew_sum(identity(a + 1), direct_sum((1,), identity(b)))


def _from_word_132_312_321(w: str) -> Perm:
    if "D" not in w:
        return identity(len(w) + 1)
    a, b = _split_single_descent(w)
    return direct_sum(skew_sum(identity(a + 1), (1,)), identity(b))


def _from_word_213_231_321(w: str) -> Perm:
    if "D" not in w:
        return identity(len(w) + 1)
    a, b = _split_single_descent(w)
    return direct_sum(identity(a), skew_sum((1,), identity(b + 1)))


def _admits_any_ballot(w: str) -> bool:
    return True


def _admits_descent_suffix(w: str) -> bool:
    return w == "U" * w.count("U") + "D" * w.count("D")


def _admits_single_descent(w: str) -> bool:
    return w.count("D") <= 1


_BUILDERS = {
    "132,213": (_admits_any_ballot, _from_word_132_213),
    "213,231": (_admits_any_ballot, _from_word_213_231),
    "231,312": (_admits_any_ballot, _from_word_231_312),
    "132,312": (_admits_any_ballot, _from_word_132_312),
    "132,213,312": (_admits_descent_suffix, _from_word_132_213_312),
    "213,231,312": (_admits_descent_suffix, _from_word_213_231_312),
    "132,213,321": (_admits_single_descent, _from_word_132_213_321),
    "132,312,321": (_admits_single_descent, _from_word_132_312_321),
    "213,231,321": (_admits_single_descent, _from_word_213_231_321),
}


def perm_from_word(patterns: PatternSet, w: str) -> Perm:
    """The unique class member of length len(w)+1 whose descent word is ``w``.

    >>> perm_from_word(((1, 3, 2), (2, 1, 3)), "UUDUUD")
    (5, 6, 7, 2, 3, 4, 1)
    """
    name = format_pattern_set(canonical_pattern_set(patterns))
    if name not in _BUILDERS:
        raise UnsupportedClassError(
            f"{{{name}}} is not one of the descent-word-determined classes"
        )
    check_step_word(w)
    admits, build = _BUILDERS[name]
    if not is_ballot_word(w):
        raise UnrealizableWordError(f"{w!r} is not a ballot word")
    if not admits(w):
        raise UnrealizableWordError(f"no member of {{{name}}} has descent word {w!r}")
    return build(w)


def wilf_transport(p: Perm, source: PatternSet, target: PatternSet) -> Perm:
    """Map a member of one class to the same-word member of an equivalent class."""
    src = format_pattern_set(canonical_pattern_set(source))
    dst = format_pattern_set(canonical_pattern_set(target))
    src_family = _family_of(src)
    dst_family = _family_of(dst)
    if src_family is None or dst_family is None or src_family is not dst_family:
        raise UnsupportedClassError(
            f"{{{src}}} and {{{dst}}} are not word-equivalent classes"
        )
    _require_member(p, canonical_pattern_set(source), "wilf_transport")
    return perm_from_word(target, descent_word(p))


_DYCK_CLASS: PatternSet = ((1, 3, 2), (2, 1, 3))


def to_dyck_prefix(p: Perm) -> str:
    """The nonnegative lattice word of a {132,213}-avoiding ballot permutation.

    >>> to_dyck_prefix((4, 5, 6, 3, 1, 2))
    'UUDDU'
    """
    _require_member(p, _DYCK_CLASS, "to_dyck_prefix")
    return descent_word(p)


def from_dyck_prefix(w: str) -> Perm:
    """Inverse of :func:`to_dyck_prefix`.

    >>> from_dyck_prefix("UUDDU")
    (4, 5, 6, 3, 1, 2)
    """
    return perm_from_word(_DYCK_CLASS, w)


_CLASS_132_321: PatternSet = ((1, 3, 2), (3, 2, 1))
_CLASS_231_321: PatternSet = ((2, 3, 1), (3, 2, 1))
_CLASS_213_321: PatternSet = ((2, 1, 3), (3, 2, 1))


def insert_132_321(s: Perm) -> Perm:
    """Insert s(1)+1 at the second position, lifting larger values.

    Maps {132,321}-avoiding permutations of length n onto the ballot
    avoiders of length n+1.

    >>> insert_132_321((3, 1, 2))
    (3, 4, 1, 2)
    """
    if not s:
        return (1,)
    for q in _CLASS_132_321:
        witness = find_occurrence(s, q)
        if witness is not None:
            pattern = "".join(str(v) for v in q)
            raise InvalidInputError(
                f"insert_132_321: {s} contains {pattern} at positions {witness}"
            )
    k = s[0]
    return (k, k + 1) + tuple(v + 1 if v > k else v for v in s[1:])


def remove_132_321(p: Perm) -> Perm:
    """Delete the second entry and standardize; inverse of :func:`insert_132_321`."""
    _require_member(p, _CLASS_132_321, "remove_132_321")
    if len(p) == 0:
        raise InvalidInputError("remove_132_321: nothing to remove from the empty permutation")
    if len(p) == 1:
        return ()
    return standardize(p[:1] + p[2:])


def prepend_231_321(s: Perm) -> Perm:
    """Prefix a new minimum; maps {231,321}-avoiders of length n into the
    ballot avoiders of length n+1.

    >>> prepend_231_321((2, 1, 3))
    (1, 3, 2, 4)
    """
    for q in _CLASS_231_321:
        witness = find_occurrence(s, q)
        if witness is not None:
            pattern = "".join(str(v) for v in q)
            raise InvalidInputError(
                f"prepend_231_321: {s} contains {pattern} at positions {witness}"
            )
    return (1,) + tuple(v + 1 for v in s)


def behead_231_321(p: Perm) -> Perm:
    """Drop the leading minimum; inverse of :func:`prepend_231_321`."""
    _require_member(p, _CLASS_231_321, "behead_231_321")
    if len(p) == 0:
        raise InvalidInputError("behead_231_321: nothing to remove from the empty permutation")
    if p[0] != 1:
        raise InvalidInputError(f"behead_231_321: {p} does not start with its minimum")
    return tuple(v - 1 for v in p[1:])


def excluded_element_213_321(n: int) -> Perm:
    """The unique non-ballot {213,321}-avoider of length n: n 1 2 ... n-1.

    >>> excluded_element_213_321(4)
    (4, 1, 2, 3)
    """
    if n < 2:
        raise InvalidInputError("excluded_element_213_321 needs n >= 2")
    return (n,) + identity(n - 1)


def generate_312_321(n: int) -> list[Perm]:
    """Build the {312,321}-avoiding ballot permutations of length n recursively.

    From length 4 on, each member of the previous generation contributes two
    children: the new maximum goes immediately before or after the last
    entry.  The doubling starts only at length 3; smaller lengths are listed
    directly.
    """
    if n < 1:
        raise InvalidInputError("generate_312_321 needs n >= 1")
    bases: dict[int, list[Perm]] = {
        1: [(1,)],
        2: [(1, 2)],
        3: [(1, 2, 3), (1, 3, 2), (2, 3, 1)],
    }
    if n in bases:
        return bases[n]
    out: list[Perm] = []
    for parent in generate_312_321(n - 1):
        head, last = parent[:-1], parent[-1]
        out.append(head + (n, last))
        out.append(head + (last, n))
    # children of distinct parents are provably distinct
    assert len(set(out)) == len(out)
    return out


def generate_fib(n: int) -> list[Perm]:
    """Build the {231,312,321}-avoiding ballot permutations of length n.

    Members arise by appending n to a member of length n-1 or n(n-1) to a
    member of length n-2; the two batches are disjoint, so the counts obey
    a(n) = a(n-1) + a(n-2) with a(1) = a(2) = 1.
    """
    if n < 1:
        raise InvalidInputError("generate_fib needs n >= 1")
    if n == 1:
        return [(1,)]
    if n == 2:
        return [(1, 2)]
    out = [s + (n,) for s in generate_fib(n - 1)]
    out += [t + (n, n - 1) for t in generate_fib(n - 2)]
    assert len(set(out)) == len(out)
    return out


def _chain_of_pairs(n: int) -> Perm:
    """(12) skew (12) skew ... with a trailing single point when n is odd."""
    blocks: list[Perm] = [(1, 2)] * (n // 2)
    if n % 2:
        blocks.append((1,))
    return reduce(skew_sum, blocks) if blocks else ()


_UNIQUE_CHAIN = {"123,132", "123,132,213"}
_UNIQUE_IDENTITY = {"132,231", "132,213,231", "132,231,312", "132,231,321"}


def unique_members(patterns: PatternSet, n: int) -> list[Perm]:
    """The explicitly constructed members of the always-small classes.

    Covers the classes whose avoiders are a single chain of descending pairs,
    the identity-only classes, and the one class with two members at odd
    lengths.
    """
    if n < 0:
        raise InvalidInputError("unique_members needs n >= 0")
    name = format_pattern_set(canonical_pattern_set(patterns))
    if name in _UNIQUE_CHAIN:
        return [_chain_of_pairs(n)]
    if name in _UNIQUE_IDENTITY:
        return [identity(n)]
    if name == "123,213":
        if n == 1 or n % 2 == 0:
            return [_chain_of_pairs(n)]
        return sorted([_chain_of_pairs(n), skew_sum(_chain_of_pairs(n - 3), (1, 3, 2))])
    raise UnsupportedClassError(f"{{{name}}} has no explicit member construction")
