"""Properties definitions: grammatical categories, attributes and feature sets.

The definition file uses one statement per ``;``::

    V_Pers = 1 + 2 + 3;
    N_Rasa = emer + rrjedh + gjin + kallez + dhan;

The attribute name prefix (``V``, ``N``, ``A`` ...) is the category the
attribute belongs to.
"""
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from shqip.core.errors import SchemaError
from shqip.core.logger import get_logger

logger = get_logger(__name__)

CATEGORIES = ("N", "V", "A", "ADV", "PREP", "CONJ", "PRO", "DET", "INTERJ", "NUM", "ONOM", "UNKNOWN")

# Tags used outside any attribute: UNAMB marks an unambiguous locution,
# hypo_n an unvalidated proposal, geg a tolerated dialect form.
FREE_TAGS = frozenset({"UNAMB", "hypo_n", "geg", "NA", "ei"})

# KEY=value properties: FLX names the paradigm, Val carries numeric values.
PROPERTY_KEYS = frozenset({"FLX", "Val"})

_STATEMENT = re.compile(r"^\s*(\w+)\s*=\s*(.+?)\s*$")


class FeatureSet:
    """Ordered, duplicate-free bundle of feature tokens.

    Equality and hashing ignore order; iteration and rendering keep the
    order the features were written in, which the ``.flx`` listing needs.
    """

    __slots__ = ("_values", "_frozen")

    def __init__(self, values: Iterable[str] = ()):
        ordered: List[str] = []
        for value in values:
            if value and value not in ordered:
                ordered.append(value)
        self._values: Tuple[str, ...] = tuple(ordered)
        self._frozen: FrozenSet[str] = frozenset(ordered)

    @classmethod
    def parse(cls, text: str) -> "FeatureSet":
        """Parse a ``+a+b+c`` suffix (leading ``+`` optional, spaces ignored)."""
        return cls(part.strip() for part in text.split("+") if part.strip())

    @property
    def values(self) -> Tuple[str, ...]:
        return self._values

    def union(self, other: Iterable[str]) -> "FeatureSet":
        return FeatureSet(self._values + tuple(other))

    def without(self, *values: str) -> "FeatureSet":
        return FeatureSet(v for v in self._values if v not in values)

    def property(self, key: str) -> Optional[str]:
        """Value of a ``KEY=value`` property, if present."""
        prefix = f"{key}="
        for value in self._values:
            if value.startswith(prefix):
                return value[len(prefix):]
        return None

    def render(self) -> str:
        """``+a+b`` rendering, empty string for an empty set."""
        return "".join(f"+{v}" for v in self._values)

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, value: object) -> bool:
        return value in self._frozen

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FeatureSet):
            return self._frozen == other._frozen
        if isinstance(other, (set, frozenset)):
            return self._frozen == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __repr__(self) -> str:
        return f"FeatureSet({'+'.join(self._values)!r})"


@dataclass(frozen=True)
class Attribute:
    name: str
    category: str
    values: Tuple[str, ...]


@dataclass(frozen=True)
class FeatureSchema:
    """Registry of categories, attributes and free tags."""
    attributes: Dict[str, Attribute] = field(default_factory=dict)
    categories: FrozenSet[str] = frozenset(CATEGORIES)
    free_tags: FrozenSet[str] = FREE_TAGS

    def attributes_for(self, category: str) -> List[Attribute]:
        return [a for a in self.attributes.values() if a.category == category]

    def attribute_of(self, category: str, value: str) -> Optional[Attribute]:
        for attribute in self.attributes_for(category):
            if value in attribute.values:
                return attribute
        return None

    def serialize(self) -> str:
        """Render back to the definition format (one statement per line)."""
        return "".join(
            f"{a.name} = {' + '.join(a.values)};\n" for a in self.attributes.values()
        )

    def __hash__(self) -> int:
        return hash(tuple(self.attributes))


def _category_of(attribute_name: str) -> str:
    return attribute_name.split("_", 1)[0]


def load_schema(text: str) -> FeatureSchema:
    """Parse properties definitions.

    Args:
        text: Definition text, ``Name = v1 + v2;`` statements, ``#`` comments

    Returns:
        FeatureSchema

    Raises:
        SchemaError: duplicate attribute, value shared by two attributes of
            one category, or malformed statement (with line number)
    """
    attributes: Dict[str, Attribute] = {}
    owners: Dict[Tuple[str, str], str] = {}

    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        for statement in filter(None, (s.strip() for s in body.split(";"))):
            match = _STATEMENT.match(statement)
            if not match:
                raise SchemaError(f"malformed statement '{statement}'", line_no)
            name, rhs = match.groups()
            if name in attributes:
                raise SchemaError(f"duplicate attribute '{name}'", line_no)

            raw_values = [v.strip() for v in rhs.split("+")]
            if any(not v or " " in v or "=" in v for v in raw_values):
                raise SchemaError(f"malformed value list in '{statement}'", line_no)

            category = _category_of(name)
            values: List[str] = []
            for value in raw_values:
                if value in values:
                    logger.warning(f"line {line_no}: duplicate value '{value}' in {name} collapsed")
                    continue
                owner = owners.get((category, value))
                if owner is not None:
                    raise SchemaError(
                        f"value '{value}' listed under both {owner} and {name}", line_no
                    )
                owners[(category, value)] = name
                values.append(value)

            attributes[name] = Attribute(name=name, category=category, values=tuple(values))

    return FeatureSchema(attributes=attributes)


def load_schema_file(path: Union[str, Path]) -> FeatureSchema:
    """Load a ``features.def`` file."""
    return load_schema(Path(path).read_text(encoding="utf-8"))


def validate(fs: FeatureSet, category: str, schema: FeatureSchema) -> List[str]:
    """Check a feature set against the schema.

    Args:
        fs: Features to check
        category: Category code the features belong to
        schema: Loaded schema

    Returns:
        List of human-readable violations (empty when valid)
    """
    violations: List[str] = []
    if category not in schema.categories:
        violations.append(f"unknown category '{category}'")

    seen: Dict[str, str] = {}
    for value in fs:
        if "=" in value:
            key = value.split("=", 1)[0]
            if key not in PROPERTY_KEYS:
                violations.append(f"unknown property '{key}'")
            continue

        attribute = schema.attribute_of(category, value)
        if attribute is None:
            if value not in schema.free_tags:
                violations.append(f"unknown value '{value}' for category {category}")
            continue

        if attribute.name in seen:
            violations.append(
                f"exclusivity violation on {attribute.name}: '{seen[attribute.name]}' and '{value}'"
            )
        else:
            seen[attribute.name] = value

    return violations
