"""
Especificação de redes de séries de Chen-Fliess.

Um documento JSON descreve m nós SISO (uma série por nó sobre {x_0, x_i}),
a matriz de pesos M e o tipo de interconexão. ``parse_network_spec`` valida a
estrutura (``NetworkDocumentValidator``), expande geradores embutidos e
trunca todas as séries no grau de trabalho N.

Na cascata (``kind = "cascade"``) os dois nós são (externo c, interno d),
ambos sobre {x_0, x_1}: x_1 é a entrada do nó, e a entrada do externo é a
saída do interno.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.algebra.series import Series, truncate
from src.algebra.words import Alphabet, Word, format_word, tokenize_word
from src.core.core import Config, Number, format_coefficient, to_coefficient
from src.core.exceptions import (
    AlphabetMismatchError,
    DimensionMismatchError,
    ParseError,
    SpecValidationError,
)
from src.validation.spec_validator import NETWORK_KINDS, NetworkDocumentValidator, get_validation_summary

logger = logging.getLogger(__name__)

Document = Union[str, Path, Dict[str, Any]]


@dataclass(frozen=True)
class NodeSpec:
    """Nó i com série c_i; ``input_letter`` é a letra da entrada do nó."""

    index: int
    series: Series
    input_letter: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise DimensionMismatchError("node index must be >= 1", context={"index": self.index})
        foreign = sorted(self.series.letters_used() - {0, self.input_letter})
        if foreign:
            raise AlphabetMismatchError(
                f"node {self.index} uses foreign letter x{foreign[0]}",
                context={"allowed": f"x0,x{self.input_letter}"},
            )

    @property
    def letters(self) -> Tuple[int, int]:
        return (0, self.input_letter)


@dataclass(frozen=True)
class WeightMatrix:
    """M ∈ Q^{m×m} (linhas = nó que recebe, colunas = nó que emite)."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.entries)
        if m < 1 or any(len(row) != m for row in self.entries):
            raise DimensionMismatchError("weight matrix must be square and non-empty",
                                         context={"rows": m})
        object.__setattr__(
            self, "entries", tuple(tuple(to_coefficient(v) for v in row) for row in self.entries)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "WeightMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(cls, m: int) -> "WeightMatrix":
        return cls(tuple((Fraction(0),) * m for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        """Acesso 1-indexado M[i, j]."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def row_product(self, i: int) -> Fraction:
        return math.prod(self.entries[i - 1], start=Fraction(1))

    @property
    def is_zero(self) -> bool:
        return not any(v for row in self.entries for v in row)

    def as_floats(self) -> List[List[float]]:
        return [[float(v) for v in row] for row in self.entries]


@dataclass(frozen=True)
class NetworkSpec:
    m: int
    kind: str
    nodes: Tuple[NodeSpec, ...]
    M: WeightMatrix
    degree: int

    def __post_init__(self) -> None:
        if self.kind not in NETWORK_KINDS:
            raise ParseError(f"unknown network kind '{self.kind}'")
        if self.degree < 0:
            raise DimensionMismatchError("degree must be >= 0", context={"degree": self.degree})
        if len(self.nodes) != self.m:
            raise DimensionMismatchError("node count differs from m",
                                         context={"m": self.m, "nodes": len(self.nodes)})
        if self.kind == "cascade" and self.m != 2:
            raise DimensionMismatchError("cascade needs exactly two nodes", context={"m": self.m})
        if self.M.m != self.m:
            raise DimensionMismatchError("weight matrix dimension differs from m",
                                         context={"m": self.m, "M": self.M.m})
        alphabet = self.alphabet
        if any(node.series.alphabet != alphabet for node in self.nodes):
            raise AlphabetMismatchError("node series over a different alphabet",
                                        context={"alphabet": str(alphabet)})

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(1) if self.kind == "cascade" else Alphabet(self.m)

    @property
    def series(self) -> Tuple[Series, ...]:
        return tuple(node.series for node in self.nodes)

    def with_degree(self, degree: int) -> "NetworkSpec":
        """Mesma rede com séries retruncadas (só reduz informação)."""
        nodes = tuple(NodeSpec(n.index, truncate(n.series, degree), n.input_letter) for n in self.nodes)
        return NetworkSpec(self.m, self.kind, nodes, self.M, degree)


# =================================================================
# PARSING
# =================================================================

def load_document(document: Document) -> Dict[str, Any]:
    """Aceita dict, caminho de arquivo ou o próprio texto JSON."""
    if isinstance(document, dict):
        return document
    text: str
    if isinstance(document, Path) or not str(document).lstrip().startswith("{"):
        path = Path(document)
        logger.debug("Lendo especificação de rede de %s", path)
        text = path.read_text(encoding="utf-8")
    else:
        text = str(document)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", context={"line": e.lineno, "column": e.colno}) from e


def factorial_geometric(alphabet: Alphabet, letter: int, degree: int) -> Series:
    """Σ_{k<=N} k! x_letter^k"""
    alphabet.check_letter(letter)
    data = {(letter,) * k: math.factorial(k) for k in range(degree + 1)}
    return Series(alphabet, data, degree)


def _parse_terms(terms: List[Dict[str, Any]], path: str, allowed: Tuple[int, int],
                 node_label: str) -> Dict[Word, Fraction]:
    data: Dict[Word, Fraction] = {}
    for t, term in enumerate(terms):
        term_path = f"{path}.terms[{t}]"
        try:
            word = tokenize_word(term["word"])
        except ParseError as e:
            raise ParseError(f"{term_path}.word: {e.message}", context=e.context) from e
        for letter in word:
            if letter not in allowed:
                raise AlphabetMismatchError(f"{path.split('.')[0]}: {node_label} uses foreign letter x{letter}",
                                            context={"term": t})
        try:
            value = to_coefficient(term["coeff"])
        except ParseError as e:
            raise ParseError(f"{term_path}.coeff: {e.message}", context=e.context) from e
        data[word] = data.get(word, Fraction(0)) + value
    return data


def _build_node(node: Dict[str, Any], i: int, alphabet: Alphabet, kind: str, degree: int) -> NodeSpec:
    index = i + 1
    input_letter = 1 if kind == "cascade" else index
    allowed = (0, input_letter)
    label = ("outer node" if i == 0 else "inner node") if kind == "cascade" else f"node {index}"
    path = f"nodes[{i}].series"
    body = node["series"]
    if body.get("builtin") == "factorial_geometric":
        letter = body["letter"]
        if letter not in allowed:
            raise AlphabetMismatchError(f"nodes[{i}]: {label} uses foreign letter x{letter}")
        series = factorial_geometric(alphabet, letter, degree)
    else:
        series = Series(alphabet, _parse_terms(body["terms"], path, allowed, label), degree)
    return NodeSpec(index, series, input_letter)


def _build_matrix(raw: List[List[Any]]) -> WeightMatrix:
    rows = []
    for i, row in enumerate(raw):
        parsed = []
        for j, entry in enumerate(row):
            try:
                parsed.append(to_coefficient(entry))
            except ParseError as e:
                raise ParseError(f"M[{i}][{j}]: {e.message}") from e
        rows.append(parsed)
    return WeightMatrix.from_rows(rows)


def parse_network_spec(document: Document, degree: Optional[int] = None,
                       config: Optional[Config] = None) -> NetworkSpec:
    """Valida e monta uma :class:`NetworkSpec`.

    ``degree`` (ex.: --degree da CLI) tem precedência sobre o campo
    ``degree`` do documento, que por sua vez tem precedência sobre
    ``CFNET_DEFAULT_DEGREE``.
    """
    doc = load_document(document)
    results = NetworkDocumentValidator().validate(doc)
    summary = get_validation_summary(results)
    if summary["error_count"] > 0:
        logger.error("Validação do documento falhou: %s erro(s) em %s",
                     summary["error_count"], ", ".join(summary["failed_paths"]))
        raise SpecValidationError(
            "network document failed validation",
            context={"error_count": summary["error_count"]},
            results=results,
        )
    if summary["warning_count"]:
        logger.warning("Validação concluiu com %s aviso(s)", summary["warning_count"])

    if degree is None:
        degree = doc.get("degree")
    if degree is None:
        degree = (config or Config()).DEFAULT_DEGREE
    if degree < 0:
        raise DimensionMismatchError("degree must be >= 0", context={"degree": degree})

    kind = doc["kind"]
    m = doc["m"]
    alphabet = Alphabet(1) if kind == "cascade" else Alphabet(m)
    nodes = tuple(_build_node(node, i, alphabet, kind, degree) for i, node in enumerate(doc["nodes"]))
    if kind == "cascade":
        if "M" in doc:
            logger.warning("Matriz M ignorada em redes do tipo cascade")
        matrix = WeightMatrix.zeros(2)
    else:
        matrix = _build_matrix(doc["M"])

    spec = NetworkSpec(m=m, kind=kind, nodes=nodes, M=matrix, degree=degree)
    logger.info("Rede %s com %s nó(s) carregada (N=%s)", kind, m, degree)
    return spec


def network_document(kind: str, series: Sequence[Series], M: Optional[Sequence[Sequence[Number]]] = None,
                     degree: Optional[int] = None) -> Dict[str, Any]:
    """Documento JSON equivalente (usado para exportar séries como nós 'polynomial')."""
    doc: Dict[str, Any] = {
        "m": len(series),
        "kind": kind,
        "nodes": [
            {"series": {"builtin": "polynomial",
                        "terms": [{"word": format_word(w), "coeff": format_coefficient(v)}
                                  for w, v in c.items()]}}
            for c in series
        ],
    }
    if M is not None:
        doc["M"] = [[format_coefficient(to_coefficient(v)) for v in row] for row in M]
    if degree is not None:
        doc["degree"] = degree
    return doc


__all__ = [
    "NodeSpec", "WeightMatrix", "NetworkSpec",
    "load_document", "factorial_geometric", "parse_network_spec", "network_document",
]
