"""
Reading an open answer set off a complete, clash-free structure.
"""

import logging
from typing import Set

from ..errors import ModelExtractionError
from ..forest import has_cycle
from ..models import GroundAtom, OpenInterpretation
from .structure import CompletionStructure, is_contradictory

logger = logging.getLogger(__name__)


def extract_model(cs: CompletionStructure) -> OpenInterpretation:
    """
    The open interpretation described by a structure.

    The universe is the set of nodes. Positive unary content becomes unary
    atoms and positive binary content on arcs becomes binary atoms; arcs
    with only negative content leave no trace. A blocked node takes the
    positive unary content of its blocker and mirrors the blocker's
    outgoing arcs.

    Raises:
        ModelExtractionError: the structure is contradictory or has a positive cycle
    """
    if is_contradictory(cs):
        raise ModelExtractionError("cannot read a model off a contradictory structure")
    if has_cycle(cs.g):
        raise ModelExtractionError("cannot read a model off a structure with a positive cycle")

    blocked = cs.blocked
    atoms: Set[GroundAtom] = set()
    nodes = cs.nodes()
    for x in nodes:
        source = blocked.get(x, x)
        for predicate in cs.positives(source):
            atoms.add(GroundAtom(predicate.name, (str(x),)))

    for x in nodes:
        source = blocked.get(x, x)
        for _, z in cs.out_arcs(source):
            for predicate in cs.positives((source, z)):
                atoms.add(GroundAtom(predicate.name, (str(x), str(z))))

    model = OpenInterpretation(frozenset(str(x) for x in nodes), frozenset(atoms))
    logger.debug("extracted a model with %d elements and %d atoms", len(model.universe), len(model.atoms))
    return model
