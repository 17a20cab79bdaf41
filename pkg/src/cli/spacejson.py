"""
Space JSON Format
Parsing and serialization of space descriptors and vectors for the command line
"""
import json
import logging
import math
import os
from typing import Any, Dict, List, Union

from src.core.errors import SpaceParseError
from src.core.pnorm import INF
from src.core.space import AbsoluteSum, Lp, PolytopeV, ProjTensor, Renormed, SpaceDescriptor
from src.core.vector import SparseVector

logger = logging.getLogger(__name__)

SPACE_TYPES = ("lp", "polytope", "renorm", "sum", "tensor")


def _parse_p(value: Any) -> float:
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity"):
            return INF
        try:
            return float(value)
        except ValueError:
            raise SpaceParseError(f"Invalid exponent {value!r}")
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise SpaceParseError(f"Invalid exponent {value!r}")


def _dump_p(p: float) -> Union[int, float, str]:
    if p == INF:
        return "inf"
    if float(p).is_integer():
        return int(p)
    return p


def _require(data: Dict[str, Any], key: str) -> Any:
    if key not in data:
        raise SpaceParseError(f"Space of type {data.get('type')!r} is missing {key!r}")
    return data[key]


def parse_vector_json(data: Any) -> SparseVector:
    """A dense list or a {"index": value} map."""
    try:
        if isinstance(data, list):
            return SparseVector.from_dense(data)
        if isinstance(data, dict):
            return SparseVector.from_json(data)
    except (TypeError, ValueError) as e:
        raise SpaceParseError(f"Invalid vector {data!r}: {e}")
    raise SpaceParseError(f"Vectors are lists or index maps, got {type(data).__name__}")


def parse_space(data: Any) -> SpaceDescriptor:
    """
    Build a descriptor from its JSON object.

    Raises:
        SpaceParseError: on unknown types, missing keys or malformed values
        InvalidDescriptor: when the parsed descriptor breaks its invariants
    """
    if not isinstance(data, dict):
        raise SpaceParseError(f"Space must be a JSON object, got {type(data).__name__}")
    kind = data.get("type")
    if kind not in SPACE_TYPES:
        raise SpaceParseError(f"Unknown space type {kind!r}; expected one of {', '.join(SPACE_TYPES)}")
    if kind == "lp":
        dim = _require(data, "dim")
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise SpaceParseError(f"dim must be an integer, got {dim!r}")
        return Lp(_parse_p(_require(data, "p")), dim)
    if kind == "polytope":
        generators = [parse_vector_json(g) for g in _require(data, "generators")]
        return PolytopeV(tuple(generators), int(_require(data, "dim")))
    if kind == "renorm":
        if "base" in data:
            base = parse_space(data["base"])
        else:
            base = parse_space({"type": "lp", "p": _require(data, "p"), "dim": _require(data, "dim")})
        return Renormed(base)
    if kind == "sum":
        return AbsoluteSum(
            parse_space(_require(data, "norm")),
            parse_space(_require(data, "left")),
            parse_space(_require(data, "right")),
        )
    return ProjTensor(parse_space(_require(data, "left")), parse_space(_require(data, "right")))


def dump_space(space: SpaceDescriptor) -> Dict[str, Any]:
    """JSON object for a descriptor; parse_space(dump_space(s)) == s."""
    if isinstance(space, Lp):
        return {"type": "lp", "p": _dump_p(space.p), "dim": space.dim}
    if isinstance(space, PolytopeV):
        return {"type": "polytope", "dim": space.dim, "generators": [g.to_json() for g in space.generators]}
    if isinstance(space, Renormed):
        return {"type": "renorm", "base": dump_space(space.base)}
    if isinstance(space, AbsoluteSum):
        return {
            "type": "sum",
            "norm": dump_space(space.norm2d),
            "left": dump_space(space.left),
            "right": dump_space(space.right),
        }
    if isinstance(space, ProjTensor):
        return {"type": "tensor", "left": dump_space(space.left), "right": dump_space(space.right)}
    raise SpaceParseError(f"Cannot serialize {space!r}")


def load_space(argument: str) -> SpaceDescriptor:
    """A SPACE argument: path to a JSON file, or the JSON text itself."""
    if os.path.isfile(argument):
        logger.debug(f"Reading space from {argument}")
        try:
            with open(argument, "r") as f:
                text = f.read()
        except OSError as e:
            raise SpaceParseError(f"Cannot read {argument}: {e}")
    else:
        text = argument
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceParseError(f"Space is neither a readable file nor valid JSON: {e}")
    return parse_space(data)


def parse_vector(text: str) -> SparseVector:
    """
    Command-line vector: dense "1,0,2", a JSON list, or a sparse JSON map {"1": 1, "3": 2}.
    """
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            return parse_vector_json(json.loads(stripped))
        except json.JSONDecodeError as e:
            raise SpaceParseError(f"Invalid vector JSON {text!r}: {e}")
    try:
        values: List[float] = [float(part) for part in stripped.split(",")]
    except ValueError:
        raise SpaceParseError(f"Invalid dense vector {text!r}")
    if not all(math.isfinite(v) for v in values):
        raise SpaceParseError(f"Vector {text!r} has non-finite entries")
    return SparseVector.from_dense(values)


def parse_float_list(text: str) -> List[float]:
    """Comma-separated reals such as an alpha grid."""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SpaceParseError(f"Invalid number list {text!r}")


def parse_range(text: str) -> List[int]:
    """Inclusive integer range "2..12" or a comma list "2,4,8"."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SpaceParseError(f"Invalid integer range {text!r}")
