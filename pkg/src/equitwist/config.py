"""Run configuration: lattice, generators, companions, cover declarations, flags.

Configs are JSON or TOML documents with the same shape.  Parsing is strict:
unknown keys are rejected and every diagnostic names the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .cover import CoverContext, CoverGenerator
from .graded import GradedDims
from .lattice import MukaiLattice, MukaiVector, default_lattice
from .objects import FormalGenerator, OrthogonalCompanion


class ConfigError(Exception):
    def __init__(self, field_path, message):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")


def _expect_keys(data, path, required, optional=()):
    if not isinstance(data, dict):
        raise ConfigError(path, f"expected a table/object, got {type(data).__name__}")
    for key in data:
        if key not in required and key not in optional:
            raise ConfigError(f"{path}.{key}", "unknown key")
    for key in required:
        if key not in data:
            raise ConfigError(f"{path}.{key}", "missing required key")


def _expect_int(value, path):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    return value


def _expect_str(value, path):
    if not isinstance(value, str):
        raise ConfigError(path, f"expected a string, got {value!r}")
    return value


def _expect_bool(value, path):
    if not isinstance(value, bool):
        raise ConfigError(path, f"expected a boolean, got {value!r}")
    return value


def _expect_list(value, path):
    if not isinstance(value, list):
        raise ConfigError(path, f"expected a list, got {value!r}")
    return value


def _parse_dims(data, path):
    if not isinstance(data, dict):
        raise ConfigError(path, "expected an object of degree -> dimension")
    entries = {}
    for key, value in data.items():
        try:
            degree = int(key)
        except (TypeError, ValueError):
            raise ConfigError(f"{path}.{key}", "degree keys must be integers") from None
        entries[degree] = _expect_int(value, f"{path}.{key}")
    try:
        return GradedDims(entries)
    except (TypeError, ValueError) as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_lattice(data, path):
    _expect_keys(data, path, required=(), optional=("rank", "gram", "v0", "point", "degree"))
    if not data or set(data) <= {"degree"}:
        return default_lattice(_expect_int(data.get("degree", 1), f"{path}.degree"))
    _expect_keys(data, path, required=("gram", "v0", "point"), optional=("rank",))
    gram_rows = _expect_list(data["gram"], f"{path}.gram")
    gram = []
    for i, row in enumerate(gram_rows):
        row = _expect_list(row, f"{path}.gram[{i}]")
        gram.append(tuple(_expect_int(x, f"{path}.gram[{i}][{j}]") for j, x in enumerate(row)))
    v0 = tuple(_expect_int(x, f"{path}.v0[{i}]") for i, x in enumerate(_expect_list(data["v0"], f"{path}.v0")))
    point = tuple(_expect_int(x, f"{path}.point[{i}]") for i, x in enumerate(_expect_list(data["point"], f"{path}.point")))
    if "rank" in data and _expect_int(data["rank"], f"{path}.rank") != len(gram):
        raise ConfigError(f"{path}.rank", "does not match the gram matrix size")
    try:
        return MukaiLattice(tuple(gram), MukaiVector(v0), MukaiVector(point))
    except (TypeError, ValueError) as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_generator(data, path):
    _expect_keys(data, path, required=("name", "endo"), optional=("dim", "calabi_yau"))
    name = _expect_str(data["name"], f"{path}.name")
    endo = _parse_dims(data["endo"], f"{path}.endo")
    dim = _expect_int(data.get("dim", 2), f"{path}.dim")
    cy = _expect_bool(data.get("calabi_yau", True), f"{path}.calabi_yau")
    try:
        return FormalGenerator(name, endo, dim_d=dim, cy_flag=cy)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def _parse_companion(data, path):
    _expect_keys(data, path, required=("name", "orthogonal_to"), optional=("endo",))
    endo = _parse_dims(data["endo"], f"{path}.endo") if "endo" in data else None
    return OrthogonalCompanion(
        _expect_str(data["name"], f"{path}.name"),
        _expect_str(data["orthogonal_to"], f"{path}.orthogonal_to"),
        endo,
    )


@dataclass
class CoverSpec:
    generators: tuple = ()
    orthogonal: tuple = ()
    tau_orthogonal: tuple = ()
    quotient_orthogonal: tuple = ()

    def context(self):
        return CoverContext(
            self.generators,
            orthogonal=self.orthogonal,
            tau_orthogonal=self.tau_orthogonal,
            quotient_orthogonal=self.quotient_orthogonal,
        )


def _parse_cover(data, path):
    _expect_keys(
        data, path, required=("generators",),
        optional=("orthogonal", "tau_orthogonal", "quotient_orthogonal"),
    )
    gens = []
    for i, g in enumerate(_expect_list(data["generators"], f"{path}.generators")):
        gpath = f"{path}.generators[{i}]"
        _expect_keys(g, gpath, required=("name",), optional=("endo", "tau_invariant"))
        endo = _parse_dims(g["endo"], f"{gpath}.endo") if "endo" in g else None
        gens.append(CoverGenerator(
            _expect_str(g["name"], f"{gpath}.name"),
            endo,
            _expect_bool(g.get("tau_invariant", False), f"{gpath}.tau_invariant"),
        ))
    orthogonal = []
    for i, pair in enumerate(_expect_list(data.get("orthogonal", []), f"{path}.orthogonal")):
        pair = _expect_list(pair, f"{path}.orthogonal[{i}]")
        if len(pair) != 2:
            raise ConfigError(f"{path}.orthogonal[{i}]", "expected a [source, target] pair")
        orthogonal.append((
            _expect_str(pair[0], f"{path}.orthogonal[{i}][0]"),
            _expect_str(pair[1], f"{path}.orthogonal[{i}][1]"),
        ))
    tau_orth = tuple(
        _expect_str(x, f"{path}.tau_orthogonal[{i}]")
        for i, x in enumerate(_expect_list(data.get("tau_orthogonal", []), f"{path}.tau_orthogonal"))
    )
    q_orth = tuple(
        _expect_str(x, f"{path}.quotient_orthogonal[{i}]")
        for i, x in enumerate(_expect_list(data.get("quotient_orthogonal", []), f"{path}.quotient_orthogonal"))
    )
    spec = CoverSpec(tuple(gens), tuple(orthogonal), tau_orth, q_orth)
    try:
        spec.context()
    except (TypeError, ValueError) as exc:
        raise ConfigError(path, str(exc)) from None
    return spec


KOSZUL_MODES = ("off", "experimental")
OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    lattice: MukaiLattice = field(default_factory=default_lattice)
    generators: tuple = ()
    companions: tuple = ()
    cover: CoverSpec = field(default_factory=CoverSpec)
    n_range: tuple = (2, 8)
    koszul_signs: str = "off"
    output_format: str = "text"

    @property
    def koszul(self):
        return self.koszul_signs == "experimental"

    def generator(self, name):
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    @classmethod
    def from_dict(cls, data, path="config"):
        _expect_keys(
            data, path, required=(),
            optional=("lattice", "generators", "companions", "cover", "n_range",
                      "koszul_signs", "format"),
        )
        lattice = _parse_lattice(data.get("lattice", {}), f"{path}.lattice")
        generators = tuple(
            _parse_generator(g, f"{path}.generators[{i}]")
            for i, g in enumerate(_expect_list(data.get("generators", []), f"{path}.generators"))
        )
        companions = tuple(
            _parse_companion(c, f"{path}.companions[{i}]")
            for i, c in enumerate(_expect_list(data.get("companions", []), f"{path}.companions"))
        )
        gen_names = {g.name for g in generators}
        for i, c in enumerate(companions):
            if c.orthogonal_to not in gen_names:
                raise ConfigError(
                    f"{path}.companions[{i}].orthogonal_to",
                    f"unknown generator {c.orthogonal_to!r}",
                )
        cover = _parse_cover(data["cover"], f"{path}.cover") if "cover" in data else _default_cover_spec()
        n_range = data.get("n_range", [2, 8])
        n_range = _expect_list(n_range, f"{path}.n_range")
        if len(n_range) != 2:
            raise ConfigError(f"{path}.n_range", "expected [lo, hi]")
        lo = _expect_int(n_range[0], f"{path}.n_range[0]")
        hi = _expect_int(n_range[1], f"{path}.n_range[1]")
        if not 1 <= lo <= hi:
            raise ConfigError(f"{path}.n_range", f"invalid range [{lo}, {hi}]")
        koszul = _expect_str(data.get("koszul_signs", "off"), f"{path}.koszul_signs")
        if koszul not in KOSZUL_MODES:
            raise ConfigError(f"{path}.koszul_signs", f"expected one of {KOSZUL_MODES}")
        fmt = _expect_str(data.get("format", "text"), f"{path}.format")
        if fmt not in OUTPUT_FORMATS:
            raise ConfigError(f"{path}.format", f"expected one of {OUTPUT_FORMATS}")
        if not generators:
            generators = _default_generators()
            if not companions:
                companions = _default_companions()
        return cls(lattice, generators, companions, cover, (lo, hi), koszul, fmt)

    @classmethod
    def default(cls):
        return cls.from_dict({})


def _default_generators():
    return (FormalGenerator("E", GradedDims({0: 1, 2: 1}), dim_d=2, cy_flag=True),)


def _default_companions():
    return (OrthogonalCompanion("F", "E"),)


def _default_cover_spec():
    surface = GradedDims({0: 1, 2: 1})
    return CoverSpec(
        generators=(
            CoverGenerator("Et", surface, tau_invariant=True),
            CoverGenerator("Ft", surface, tau_invariant=False),
        ),
        orthogonal=(("Et", "Ft"),),
        tau_orthogonal=("Ft",),
        quotient_orthogonal=("C",),
    )


def load_config(path):
    """Load a RunConfig from a .json or .toml file."""
    text_path = str(path)
    try:
        if text_path.endswith(".toml"):
            with open(text_path, "rb") as fh:
                data = tomllib.load(fh)
        elif text_path.endswith(".json"):
            with open(text_path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        else:
            raise ConfigError(text_path, "config must be a .json or .toml file")
    except FileNotFoundError:
        raise ConfigError(text_path, "file not found") from None
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(text_path, f"parse error: {exc}") from None
    return RunConfig.from_dict(data, path="config")
