"""
Structure maps given on generators and their unique extensions
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Union

from src.errors import ConfigurationError, MissingAssignmentError
from src.freealg import Element, Word
from src.report import VerificationReport
from src.structure.presentation import DGAPresentation, koszul_reversal_sign
from src.tensoralg import TensorElement, TensorSystem, as_tensor

MAP_KINDS = ("algebra", "anti_algebra", "derivation", "coaction", "action")

Image = Union[Element, TensorElement]


@dataclass
class MapSpec:
    """
    A map given on generators

    Args:
        kind: One of MAP_KINDS; decides the extension rule
        source: Presentation the map is defined on
        target: DGAPresentation or TensorSystem receiving the images
        assignments: Generator name -> image
        name: Used in diagnostics and report subjects
        parity: Parity of a derivation (d is odd)
        default: Fallback image for generators without an assignment
        action: Action object for kind "action" (RightAction, LeftAction)
    """

    kind: str
    source: DGAPresentation
    target: Any
    assignments: Dict[str, Any] = field(default_factory=dict)
    name: str = "map"
    parity: int = 0
    default: Optional[Callable[[str], Optional[Image]]] = None
    action: Any = None
    _cache: Dict[Word, Image] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.kind not in MAP_KINDS:
            raise ConfigurationError(f"unknown map kind {self.kind!r}")
        if self.kind == "action" and self.action is None:
            raise ConfigurationError(f"action map {self.name} needs an action object")

    @property
    def tensor_valued(self) -> bool:
        return isinstance(self.target, TensorSystem)

    def image(self, name: str) -> Image:
        if name in self.assignments:
            return self.assignments[name]
        if self.default is not None:
            value = self.default(name)
            if value is not None:
                return value
        raise MissingAssignmentError(name, self.name)

    def zero(self) -> Image:
        return self.target.zero()

    def extend_word(self, word: Word) -> Image:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        if self.kind in ("algebra", "coaction"):
            result = self.target.product(self._lift(self.image(x)) for x in word)
        elif self.kind == "anti_algebra":
            images = [self._lift(self.image(x)) for x in reversed(word)]
            result = self.target.product(images).scale(koszul_reversal_sign(word, self.source.alphabet))
        elif self.kind == "derivation":
            result = self._leibniz(word)
        else:
            raise ConfigurationError("actions extend through extend_map with an acting element")
        self._cache[word] = result
        return result

    def _lift(self, value: Image) -> Image:
        if self.tensor_valued and isinstance(value, Element):
            return as_tensor(value)
        return value

    def _leibniz(self, word: Word) -> Element:
        total = Element.zero()
        degree = 0
        for i, x in enumerate(word):
            image = self.image(x)
            if not image.is_zero():
                term = Element.word(*word[:i]) * image * Element.word(*word[i + 1:])
                total = total + (-term if (self.parity * degree) % 2 else term)
            degree += self.source.alphabet[x].degree
        return self.target.reduce(total)


def extend_map(m: MapSpec, e: Element, acting: Optional[Element] = None) -> Image:
    """
    Extend a generator map to an element by its declared kind

    Args:
        m: Map specification
        e: Element of the source
        acting: Acting element, for kind "action" only

    Returns:
        Normal-formed image in the target

    Raises:
        MissingAssignmentError: a generator of e has no image
    """
    if m.kind == "action":
        if acting is None:
            raise ConfigurationError(f"action {m.name} needs an acting element")
        return m.action.act(e, acting)
    total = m.zero()
    for w, c in e.terms.items():
        total = total + m.extend_word(w).scale(c)
    return total


def verify_well_defined(
    m: MapSpec,
    source: Optional[DGAPresentation] = None,
    report: Optional[VerificationReport] = None,
    check: Optional[str] = None,
) -> VerificationReport:
    """Every relation of the source must map to zero in the target"""
    source = source or m.source
    report = report if report is not None else VerificationReport(title=f"{m.name} well-defined")
    label = check or f"well_defined.{m.name}"
    for rel in source.system.relations():
        image = extend_map(m, rel)
        report.add(label, str(rel), image.is_zero(), image)
    return report


def identity_map(p: DGAPresentation) -> MapSpec:
    return MapSpec(
        "algebra",
        p,
        p,
        {g.name: Element.word(g.name) for g in p.alphabet},
        name=f"id_{p.name}",
    )
