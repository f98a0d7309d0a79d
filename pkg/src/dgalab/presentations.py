"""Finite presentations: algebras by polynomial relations, groups by relators.

Group relators are stored as freely reduced sequences of signed letters
(generator index, +1/-1); reduction happens on ingest so the downstream
constructions never see a g*g^-1 adjacency.
"""

from __future__ import annotations

from .algebra import Generator, NcPoly, Signature, require_same_signature
from .errors import DuplicateGenerator, UnknownGenerator
from .rings import Ring


def free_reduce(letters):
    """Cancel adjacent (i, s)(i, -s) pairs until none remain."""
    stack = []
    for letter in letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class GroupPresentation:
    def __init__(self, name: str, generators, relators):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise DuplicateGenerator(f"repeated generator in group presentation {name!r}")
        normalized = []
        for relator in relators:
            letters = []
            for idx, sign in relator:
                if not 0 <= idx < len(gens):
                    raise UnknownGenerator(f"relator letter index {idx} out of range")
                if sign not in (1, -1):
                    raise ValueError(f"letter sign must be +1 or -1, got {sign}")
                letters.append((idx, sign))
            normalized.append(free_reduce(letters))
        self.name = name
        self.generators = gens
        self.relators = tuple(normalized)

    def relator_text(self, relator) -> str:
        if not relator:
            return "1"
        parts = []
        i = 0
        while i < len(relator):
            j = i
            while j < len(relator) and relator[j] == relator[i]:
                j += 1
            idx, sign = relator[i]
            exp = (j - i) * sign
            name = self.generators[idx]
            parts.append(name if exp == 1 else f"{name}^{exp}")
            i = j
        return "*".join(parts)

    def to_text(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.relator_text(r) for r in self.relators)
        return f"group {self.name} = < {gens} | {rels} >".replace("<  |", "< |")

    def to_data(self):
        return {
            "kind": "group",
            "name": self.name,
            "generators": list(self.generators),
            "relators": [self.relator_text(r) for r in self.relators],
        }

    def __eq__(self, other):
        return (isinstance(other, GroupPresentation)
                and (self.name, self.generators, self.relators)
                == (other.name, other.generators, other.relators))

    def __repr__(self):
        return f"GroupPresentation({self.to_text()!r})"


class AlgebraPresentation:
    """Degree-0 generators plus polynomial relations over a fixed ring."""

    def __init__(self, name: str, sig: Signature, relations):
        if any(g.degree != 0 for g in sig.generators):
            raise ValueError("algebra presentations live in degree 0")
        rels = tuple(relations)
        for f in rels:
            require_same_signature(f.sig, sig)
        self.name = name
        self.sig = sig
        self.relations = rels

    @classmethod
    def over(cls, name: str, ring: Ring, generator_names, relation_terms):
        """Convenience builder from raw term dicts keyed by index words."""
        names = tuple(generator_names)
        if len(set(names)) != len(names):
            raise DuplicateGenerator(f"repeated generator in algebra presentation {name!r}")
        sig = Signature(ring, [Generator(n, 0) for n in names])
        return cls(name, sig, [NcPoly(sig, t) for t in relation_terms])

    @property
    def generators(self):
        return tuple(self.sig.names())

    @property
    def ring(self):
        return self.sig.ring

    def to_text(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(str(f) for f in self.relations)
        return f"algebra {self.name} = < {gens} | {rels} >".replace("<  |", "< |")

    def to_data(self):
        return {
            "kind": "algebra",
            "name": self.name,
            "generators": list(self.generators),
            "relations": [str(f) for f in self.relations],
        }

    def __eq__(self, other):
        return (isinstance(other, AlgebraPresentation)
                and (self.name, self.sig, self.relations)
                == (other.name, other.sig, other.relations))

    def __repr__(self):
        return f"AlgebraPresentation({self.to_text()!r})"
