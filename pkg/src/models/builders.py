"""
Construção de representações formais para redes de séries de Chen-Fliess.

Para ż_i = (x_0 + x_i u_i) z_i a entrada u_i é decomposta pelas letras do
alfabeto da rede: o que multiplica u_0 = 1 vai para μ(x_0) e o que multiplica
a entrada externa v_i vai para μ(x_i).

    aditiva:        u_i = v_i + Σ_j M_ij y_j
        μ(x_0)_i = x_0 + Σ_j x_i · M_ij ⟨c_j, z_j⟩      μ(x_i)_i = x_i
    multiplicativa: u_i = v_i Π_j M_ij y_j
        μ(x_0)_i = x_0                                 μ(x_i)_i = x_i · (Π_j M_ij) ⟨c_1⊗...⊗c_m, z⟩
    cascata (c ∘ d), n = 2, alfabeto {x_0, x_1}:
        μ(x_0) = (x_0, x_0 + x_1⟨d, z_1⟩)              μ(x_1) = (x_1, 0)

Saídas: ĉ_k = 1 ⊗ ... ⊗ c_k ⊗ ... ⊗ 1 (na cascata ĉ = 1 ⊗ c).
"""

import logging
from typing import Dict, List

from src.algebra.series import Series
from src.algebra.tensor import TensorFunctional, TensorTerm, embed
from src.core.exceptions import AlphabetMismatchError, DimensionMismatchError, ParseError
from src.engine.representation import FieldTerm, FormalRepresentation, StateField
from src.models.network_spec import NetworkSpec, NodeSpec, WeightMatrix

logger = logging.getLogger(__name__)


def _require_kind(spec: NetworkSpec, kind: str) -> None:
    if spec.kind != kind:
        raise ParseError(f"expected a {kind} network, got {spec.kind}")


def _drift_terms(spec: NetworkSpec) -> List[FieldTerm]:
    unit = TensorFunctional.unit(spec.alphabet, spec.m)
    return [FieldTerm.letter(spec.alphabet, 0, unit)]


def _input_fields(spec: NetworkSpec, coefficients: Dict[int, TensorFunctional]) -> Dict[int, StateField]:
    """μ(x_i) com uma única parcela x_i · coefficients[i] no slot i."""
    alphabet, m = spec.alphabet, spec.m
    return {
        i: StateField.build(alphabet, m, {i: [FieldTerm.letter(alphabet, i, coefficients[i])]})
        for i in range(1, m + 1)
    }


def _outputs(spec: NetworkSpec) -> tuple:
    return tuple(embed(node.series, node.index, spec.m) for node in spec.nodes)


def build_additive(spec: NetworkSpec) -> FormalRepresentation:
    _require_kind(spec, "additive")
    alphabet, m, M = spec.alphabet, spec.m, spec.M
    drift: Dict[int, List[FieldTerm]] = {}
    for i in range(1, m + 1):
        terms = _drift_terms(spec)
        for j, node in enumerate(spec.nodes, start=1):
            weight = M[i, j]
            if weight:
                terms.append(FieldTerm.letter(alphabet, i, embed(node.series, j, m).scaled(weight)))
        drift[i] = terms

    unit = TensorFunctional.unit(alphabet, m)
    mu = {0: StateField.build(alphabet, m, drift)}
    mu.update(_input_fields(spec, {i: unit for i in range(1, m + 1)}))
    logger.debug("Representação aditiva montada (m=%s)", m)
    return FormalRepresentation(alphabet, m, mu, _outputs(spec), label="additive")


def build_multiplicative(spec: NetworkSpec) -> FormalRepresentation:
    """Produto Π_j M_ij sobre todos os j (um peso nulo anula a entrada do nó i)."""
    _require_kind(spec, "multiplicative")
    alphabet, m, M = spec.alphabet, spec.m, spec.M
    product_slots = tuple(node.series for node in spec.nodes)
    coefficients = {
        i: TensorFunctional(alphabet, m, [TensorTerm(product_slots, M.row_product(i))])
        for i in range(1, m + 1)
    }
    mu = {0: StateField.build(alphabet, m, {i: _drift_terms(spec) for i in range(1, m + 1)})}
    mu.update(_input_fields(spec, coefficients))
    logger.debug("Representação multiplicativa montada (m=%s)", m)
    return FormalRepresentation(alphabet, m, mu, _outputs(spec), label="multiplicative")


def build_cascade(c: Series, d: Series) -> FormalRepresentation:
    """Realização de dimensão 2 de F_c ∘ F_d (c externo, d interno)."""
    if c.alphabet != d.alphabet:
        raise AlphabetMismatchError("cascade series over different alphabets")
    alphabet = c.alphabet
    if alphabet.m != 1:
        raise DimensionMismatchError("cascade needs series over {x0, x1}", context={"m": alphabet.m})
    unit = TensorFunctional.unit(alphabet, 2)
    x0 = FieldTerm.letter(alphabet, 0, unit)
    mu = {
        0: StateField.build(alphabet, 2, {1: [x0], 2: [x0, FieldTerm.letter(alphabet, 1, embed(d, 1, 2))]}),
        1: StateField.build(alphabet, 2, {1: [FieldTerm.letter(alphabet, 1, unit)]}),
    }
    return FormalRepresentation(alphabet, 2, mu, (embed(c, 2, 2),), label="cascade")


def build_representation(spec: NetworkSpec) -> FormalRepresentation:
    """Despacha pelo tipo de interconexão."""
    if spec.kind == "additive":
        return build_additive(spec)
    if spec.kind == "multiplicative":
        return build_multiplicative(spec)
    outer, inner = spec.series
    return build_cascade(outer, inner)


def network_from_series(kind: str, series, M=None, degree: int = 4) -> NetworkSpec:
    """Atalho programático: NetworkSpec a partir de séries já montadas."""
    m = len(series)
    nodes = tuple(
        NodeSpec(i, c, 1 if kind == "cascade" else i) for i, c in enumerate(series, start=1)
    )
    matrix = WeightMatrix.from_rows(M) if M is not None else WeightMatrix.zeros(m)
    return NetworkSpec(m=m, kind=kind, nodes=nodes, M=matrix, degree=degree)


__all__ = [
    "build_additive", "build_multiplicative", "build_cascade",
    "build_representation", "network_from_series",
]
