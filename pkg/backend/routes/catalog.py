"""
Catalog Route
Lists the polynomial families, descriptor flags and verification suites
"""

from typing import Dict, List

from fastapi import APIRouter
from pydantic import BaseModel

from models.families import FAMILY_INFO, Orientation
from models.suites import SUITE_INFO
from utils.descriptors import ALIASES

router = APIRouter()

DESCRIPTOR_FLAGS: Dict[str, str] = {
    ":asc / :desc": "ascending (fixed degree) or descending (fixed minimum degree) orientation, desc by default",
    ":alt": "alternating basis interleaving the even and odd subfamilies",
    ":sup": "superposed alternating basis, adjacent elements summed",
    ":neg": "superposition with the neighbour subtracted",
    "@N": "truncated classical family drawn from index N",
    "@u,l": "truncated family on the window [l..u] drawn from index u, fixing n and m",
}


class FamilyEntry(BaseModel):
    name: str
    aliases: List[str]
    description: str
    definite_parity: bool
    classical: bool
    step: int


class FamiliesResponse(BaseModel):
    families: List[FamilyEntry]
    orientations: List[str]
    flags: Dict[str, str]
    suites: Dict[str, str]


@router.get("/families", response_model=FamiliesResponse)
async def list_families():
    families = [
        FamilyEntry(
            name=family.value,
            aliases=sorted(alias for alias, target in ALIASES.items() if target is family),
            description=description,
            definite_parity=family.definite_parity,
            classical=family.classical,
            step=family.step,
        )
        for family, description in FAMILY_INFO.items()
    ]
    return FamiliesResponse(
        families=families,
        orientations=[o.value for o in Orientation],
        flags=DESCRIPTOR_FLAGS,
        suites=SUITE_INFO,
    )
