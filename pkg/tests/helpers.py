"""Shared test machinery: an independent brute-force evaluator for kin
terms (built straight from the raw tree JSON, bypassing the library's
tree and semantics code paths) and random term generators."""

from __future__ import annotations

import random

from kisp.terms import Atom, Basic, Concat, Dual, Fork, Inverse, KinTerm, from_spine

ATOMS = list(Atom)

_FLIP = {
    "father": "mother",
    "mother": "father",
    "son": "daughter",
    "daughter": "son",
    "husband": "wife",
    "wife": "husband",
}


class TreeOracle:
    """Reference semantics computed from raw JSON person/bond records.

    Dual is handled with a sex-flip flag threaded through the recursion
    (the library instead rewrites the term), and inverse by scanning all
    persons — an independent route to the same sets.
    """

    def __init__(self, raw: dict):
        self.ids = [p["id"] for p in raw["persons"]]
        self.sex = {p["id"]: p["sex"] for p in raw["persons"]}
        self.parents: dict[str, list[str]] = {i: [] for i in self.ids}
        self.children: dict[str, list[str]] = {i: [] for i in self.ids}
        self.spouses: dict[str, list[str]] = {i: [] for i in self.ids}
        for bond in raw.get("bonds", []):
            if bond["type"] == "parental":
                self.parents[bond["child"]].append(bond["parent"])
                self.children[bond["parent"]].append(bond["child"])
            else:
                self.spouses[bond["a"]].append(bond["b"])
                self.spouses[bond["b"]].append(bond["a"])

    def atom(self, name: str, pid: str) -> set[str]:
        if name == "father":
            pool, want = self.parents[pid], "MALE"
        elif name == "mother":
            pool, want = self.parents[pid], "FEMALE"
        elif name == "son":
            pool, want = self.children[pid], "MALE"
        elif name == "daughter":
            pool, want = self.children[pid], "FEMALE"
        elif name == "husband":
            pool, want = self.spouses[pid], "MALE"
        elif name == "wife":
            pool, want = self.spouses[pid], "FEMALE"
        else:
            raise ValueError(name)
        return {q for q in pool if self.sex[q] == want}

    def eval(self, term: KinTerm, people) -> frozenset[str]:
        return self._eval(term, frozenset(people), False)

    def _eval(self, term: KinTerm, people: frozenset[str], flip: bool) -> frozenset[str]:
        if isinstance(term, Basic):
            name = _FLIP[term.atom.value] if flip else term.atom.value
            out: set[str] = set()
            for pid in people:
                out |= self.atom(name, pid)
            return frozenset(out)
        if isinstance(term, Concat):
            return self._eval(term.left, self._eval(term.right, people, flip), flip)
        if isinstance(term, Fork):
            return self._eval(term.left, people, flip) | self._eval(
                term.right, people, flip
            )
        if isinstance(term, Inverse):
            return frozenset(
                v
                for v in self.ids
                if self._eval(term.inner, frozenset((v,)), flip) & people
            )
        if isinstance(term, Dual):
            return self._eval(term.inner, people, not flip)
        raise TypeError(term)


def random_term(
    rng: random.Random,
    budget: int,
    allow_inverse: bool = True,
    allow_dual: bool = True,
    depth: int = 0,
    inverse_nesting: int = 2,
) -> KinTerm:
    """A random term with at most ``budget`` concatenation nodes.

    Nested inverses are capped: each inverse layer multiplies evaluation
    cost by the tree size, so unbounded nesting makes bulk runs crawl.
    """

    def sub(new_budget: int, nesting: int = inverse_nesting) -> KinTerm:
        return random_term(
            rng, new_budget, allow_inverse, allow_dual, depth + 1, nesting
        )

    choices = ["basic"] * 2
    if budget > 0 and depth < 8:
        choices += ["concat"] * 4 + ["fork"] * 3
    if depth < 8:
        if allow_inverse and inverse_nesting > 0:
            choices += ["inverse"]
        if allow_dual:
            choices += ["dual"]
    op = rng.choice(choices)
    if op == "basic":
        return Basic(rng.choice(ATOMS))
    if op == "concat":
        split = rng.randint(0, budget - 1)
        return Concat(sub(split), sub(budget - 1 - split))
    if op == "fork":
        split = rng.randint(0, budget)
        return Fork(sub(split), sub(budget - split))
    if op == "inverse":
        return Inverse(sub(budget, inverse_nesting - 1))
    return Dual(sub(budget))


def random_block(rng: random.Random) -> KinTerm:
    """One concatenation-spine segment: an atom or a two-atom fork."""
    if rng.random() < 0.3:
        a, b = rng.sample(ATOMS, 2)
        return Fork(Basic(a), Basic(b))
    return Basic(rng.choice(ATOMS))


def random_chain(rng: random.Random, n_concats: int) -> KinTerm:
    """A pure concatenation chain with exactly ``n_concats`` joins."""
    return from_spine([random_block(rng) for _ in range(n_concats + 1)])


def random_subset(rng: random.Random, ids: list[str]) -> frozenset[str]:
    k = rng.randint(0, len(ids))
    return frozenset(rng.sample(ids, k))
