"""
WHQ Engine - Bundled Examples

Builds the example structures listed in ``config/examples.yaml``.
"""
import logging
from dataclasses import replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

import yaml

from .exact import QQ, Field
from .structure import (
    WeakStructure,
    cyclic_group_table,
    group_algebra,
    groupoid_algebra,
    loop_algebra,
    pair_groupoid,
    steiner_loop_table,
    symmetric_group_table,
    trivial_structure,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4)
def load_catalog(path: Optional[Path] = None) -> dict:
    """Parse the example catalog YAML."""
    if path is None:
        from config.settings import settings

        path = settings.examples_config_path
    with open(path, "r", encoding="utf-8") as f:
        catalog = yaml.safe_load(f)
    if not isinstance(catalog, dict) or "examples" not in catalog:
        raise ValueError(f"{path} has no 'examples' section")
    return catalog


def example_names(path: Optional[Path] = None) -> List[str]:
    return list(load_catalog(path)["examples"])


def resolve_name(name: str, group: Optional[str] = None, path: Optional[Path] = None) -> str:
    """Map CLI names (``group`` + ``--group``) onto catalog keys."""
    catalog = load_catalog(path)
    if name == "group":
        alias = group or catalog.get("default_group", "s3")
        try:
            return catalog["groups"][alias]
        except KeyError:
            raise ValueError(f"unknown group {alias!r}; choose from {', '.join(catalog['groups'])}") from None
    if name not in catalog["examples"]:
        raise ValueError(f"unknown example {name!r}; choose from {', '.join(catalog['examples'])}")
    return name


def build_example(name: str, field: Field = QQ, path: Optional[Path] = None) -> WeakStructure:
    """Construct the named catalog entry over ``field``."""
    entry: Dict = load_catalog(path)["examples"].get(name)
    if entry is None:
        raise ValueError(f"unknown example {name!r}")
    kind = entry["kind"]
    if kind == "trivial":
        S = trivial_structure(field)
    elif kind == "cyclic-group":
        n = int(entry["order"])
        S = group_algebra(cyclic_group_table(n), field, labels=[f"g{k}" for k in range(n)])
    elif kind == "symmetric-group":
        table, labels = symmetric_group_table(int(entry["degree"]))
        S = group_algebra(table, field, labels=labels)
    elif kind == "pair-groupoid":
        n = int(entry["objects"])
        arrows, composition = pair_groupoid(n)
        S = groupoid_algebra(n, arrows, composition, field)
    elif kind == "steiner-loop":
        table = steiner_loop_table(entry["triples"])
        S = loop_algebra(table, field, labels=["e"] + [str(p) for p in range(1, len(table))])
    else:
        raise ValueError(f"unknown example kind {kind!r} for {name}")
    logger.info(f"built example {name} ({kind}) over {field}")
    return replace(S, name=name)


def all_examples(field: Field = QQ) -> Dict[str, WeakStructure]:
    return {name: build_example(name, field) for name in example_names()}
