"""The A-side module of the (p,1) pattern in the solid torus.

Generators are a and b_1 .. b_{2p-2}; a pairs with i0 generators of the
complement module and the b_k pair with i1 generators.  Multiplication
operations are recorded as (source, chord labels, U power, target).  Two of
the six operation families repeat the chord rho_23 an unbounded number of
times; those always carry a positive U power, so they are produced lazily
and the hat-flavor table (U = 0) is finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .gradings import GradingElement


@dataclass(frozen=True)
class AOperation:
    source: str
    inputs: tuple[str, ...]
    u_power: int
    target: str

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "inputs": list(self.inputs),
            "u_power": self.u_power,
            "target": self.target,
        }


@dataclass(frozen=True)
class TypeAModule:
    p: int
    generators: tuple[str, ...]
    gradings: dict[str, GradingElement] = field(repr=False)
    #: the four finite operation families, materialized
    finite_operations: tuple[AOperation, ...] = field(repr=False)
    #: left normalizer of the coset gradings
    g: GradingElement = field(repr=False)

    def pairs_with(self, name: str) -> str:
        """Idempotent class of complement generators this generator pairs with."""
        return "i0" if name == "a" else "i1"

    def operations(self, rho23_bound: int = 0) -> Iterator[AOperation]:
        """All operations whose rho_23 repetition count is at most the bound.

        The two unbounded families (the only consumers of rho_3/rho_23)
        carry U powers p*j + i + 1 and p*(j + 1), so no bound is ever needed
        for hat-flavor work.
        """
        yield from self.finite_operations
        p = self.p
        for j in range(rho23_bound + 1):
            for i in range(p - 1):
                yield AOperation(
                    "a", ("3",) + ("23",) * j + ("2",) + ("12",) * i + ("1",), p * j + i + 1, f"b{i + 1}"
                )
            yield AOperation("a", ("3",) + ("23",) * j + ("2",), p * (j + 1), "a")

    def as_dict(self, rho23_bound: int = 0) -> dict:
        return {
            "p": self.p,
            "generators": list(self.generators),
            "operations": [op.as_dict() for op in self.operations(rho23_bound)],
        }


def build_typea_minus(p: int) -> TypeAModule:
    """Instantiate the pattern module for a given winding number p > 1."""
    if p <= 1:
        raise ValueError(f"pattern requires p > 1, got {p}")
    generators = ("a",) + tuple(f"b{k}" for k in range(1, 2 * p - 1))

    gradings = {"a": GradingElement.identity()}
    # gr(b_{2p-i-2}) = (-1/2; i+1/2, -1/2; 0),      0 <= i <= p-2
    # gr(b_i)       = ( 1/2; i-1/2, -1/2; i-p),     1 <= i <= p-1
    for i in range(p - 1):
        gradings[f"b{2 * p - i - 2}"] = GradingElement(-1, 2 * i + 1, -1, 0)
    for i in range(1, p):
        gradings[f"b{i}"] = GradingElement(1, 2 * i - 1, -1, 2 * (i - p))

    ops: list[AOperation] = []
    # m_1(b_k) = U^{p-k} b_{2p-k-1},                      1 <= k <= p-1
    for k in range(1, p):
        ops.append(AOperation(f"b{k}", (), p - k, f"b{2 * p - k - 1}"))
    # m(b_k, rho_2, rho_12^i, rho_1) = U^{i+1} b_{k+i+1}, 1 <= k <= p-2, 0 <= i <= p-k-2
    for k in range(1, p - 1):
        for i in range(p - k - 1):
            ops.append(AOperation(f"b{k}", ("2",) + ("12",) * i + ("1",), i + 1, f"b{k + i + 1}"))
    # m(b_k, rho_2, rho_12^i, rho_1) = b_{k-i-1},         p+1 <= k <= 2p-2, 0 <= i <= k-1-p
    for k in range(p + 1, 2 * p - 1):
        for i in range(k - p):
            ops.append(AOperation(f"b{k}", ("2",) + ("12",) * i + ("1",), 0, f"b{k - i - 1}"))
    # m(a, rho_12^i, rho_1) = b_{2p-i-2},                 0 <= i <= p-2
    for i in range(p - 1):
        ops.append(AOperation("a", ("12",) * i + ("1",), 0, f"b{2 * p - i - 2}"))

    g = GradingElement(-1, 0, 2, 2 * p)
    return TypeAModule(p=p, generators=generators, gradings=gradings,
                       finite_operations=tuple(ops), g=g)


def hat_operations(module: TypeAModule) -> dict[tuple[str, tuple[str, ...]], str]:
    """Operation table at U = 0, keyed by (source, chord label sequence).

    Exactly the operations with U power zero survive:
    m(a, rho_12^i, rho_1) and m(b_k, rho_2, rho_12^i, rho_1) with k > p.
    """
    table: dict[tuple[str, tuple[str, ...]], str] = {}
    for op in module.finite_operations:
        if op.u_power == 0:
            table[(op.source, op.inputs)] = op.target
    return table
