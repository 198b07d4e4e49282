"""
Basis Descriptors
Parser for the flat basis grammar shared by the CLI and the API:
family[:asc|:desc][:alt][:sup][:neg][@N|@u,l]
"""

import logging
import re
from typing import Dict, Optional, Tuple

from models.families import Family, Orientation
from models.registry import BasisSpec
from utils import config
from utils.errors import DescriptorError, SpanError, WindowError
from utils.exact import Polynomial

logger = logging.getLogger(__name__)

# Short names accepted next to the Family values
ALIASES: Dict[str, Family] = {
    "x": Family.MONOMIAL,
    "b": Family.BERNSTEIN,
    "r": Family.ZERNIKE,
    "t": Family.CHEBYSHEV_T,
    "u": Family.CHEBYSHEV_U,
    "v": Family.CHEBYSHEV_V,
    "p": Family.LEGENDRE,
    "p*": Family.SHIFTED_LEGENDRE,
    "u*": Family.SHIFTED_CHEBYSHEV_U,
    "l": Family.LAGUERRE,
    "h": Family.HERMITE,
}

_DESCRIPTOR = re.compile(
    r"^(?P<family>[A-Za-z_*]+)(?P<flags>(?::[a-z]+)*)(?:@(?P<source>\d+)(?:,(?P<low>\d+))?)?$"
)


def parse_family(name: str) -> Family:
    key = name.strip().lower()
    if key == "w":
        raise DescriptorError("W is the superposed U basis, write u:sup")
    if key in ALIASES:
        return ALIASES[key]
    try:
        return Family(key)
    except ValueError:
        raise DescriptorError(f"unknown family {name!r}") from None


def parse_descriptor(text: str) -> Dict:
    """
    Split a descriptor into BasisSpec fields plus `source` and `window`.
    `@N` sets the source index. `@u,l` sets the truncation window [l..u]
    with F_u as the source, and `window` is then (u, l).
    """
    match = _DESCRIPTOR.match(text.strip())
    if match is None:
        raise DescriptorError(f"malformed basis descriptor {text!r}")
    fields = {
        "family": parse_family(match.group("family")),
        "orientation": Orientation.DESC,
        "alternating": False,
        "superposed": False,
        "sign": 1,
        "source": int(match.group("source")) if match.group("source") else None,
        "window": None,
    }
    if match.group("low") is not None:
        u, l = fields["source"], int(match.group("low"))
        if u < l:
            raise DescriptorError(f"window @{u},{l} in {text!r} needs u >= l")
        fields["window"] = (u, l)
    seen = set()
    for flag in filter(None, match.group("flags").split(":")):
        if flag in seen:
            raise DescriptorError(f"flag :{flag} repeated in {text!r}")
        seen.add(flag)
        if flag in ("asc", "desc"):
            if {"asc", "desc"} <= seen:
                raise DescriptorError(f"{text!r} is both ascending and descending")
            fields["orientation"] = Orientation(flag)
        elif flag == "alt":
            fields["alternating"] = True
        elif flag == "sup":
            fields["superposed"] = True
            fields["alternating"] = True
        elif flag == "neg":
            fields["sign"] = -1
        else:
            raise DescriptorError(f"unknown flag :{flag} in {text!r}")
    if fields["sign"] == -1 and not fields["superposed"]:
        raise DescriptorError(":neg only applies to superposed bases")
    return fields


def descriptor_window(text: str) -> Optional[Tuple[int, int]]:
    return parse_descriptor(text)["window"]


def default_m(family: Family, n: int, alternating: bool = False) -> int:
    """Lowest window start for n: 0, or n mod 2 for parity-definite families"""
    if family.definite_parity and not alternating:
        return n % 2
    return 0


def basis_from_descriptor(text: str, n: Optional[int] = None, m: Optional[int] = None) -> BasisSpec:
    """
    BasisSpec on the window [m..n]. A descriptor window @u,l supplies n and m
    and must agree with any n or m given alongside it.
    """
    fields = parse_descriptor(text)
    source = fields.pop("source")
    window = fields.pop("window")
    if window is not None:
        u, l = window
        if (n is not None and n != u) or (m is not None and m != l):
            raise WindowError(f"{text!r} fixes the window [{l}..{u}], got n={n}, m={m}")
        n, m = u, l
    if n is None:
        raise WindowError(f"{text!r} needs a window top n")
    if m is None:
        m = default_m(fields["family"], n, fields["alternating"])
    shift = 0
    if source is not None:
        if source < n:
            raise WindowError(f"source index @{source} is below the window top {n}")
        shift = source - n
    spec = BasisSpec.create(m=m, n=n, shift=shift, **fields)
    logger.debug(f"descriptor {text!r} -> {spec.describe()}")
    return spec


def conversion_basis(text: str, p: Polynomial, n: Optional[int] = None, m: Optional[int] = None) -> BasisSpec:
    """
    Target basis for converting p. The window defaults to a descriptor
    window, then to p's own degree range. A parity-definite family on a
    window of mixed parity is widened by one degree so the even and odd
    parts of p each fit inside it.
    """
    window = descriptor_window(text)
    if window is not None:
        check_degree(window[0])
        for degree, _ in p:
            if not window[1] <= degree <= window[0]:
                raise SpanError(f"degree {degree} lies outside [{window[1]}..{window[0]}]")
        return basis_from_descriptor(text, n, m)
    low = p.min_degree() if m is None else m
    high = p.degree() if n is None else n
    for degree, _ in p:
        if not low <= degree <= high:
            raise SpanError(f"degree {degree} lies outside [{low}..{high}]")
    fields = parse_descriptor(text)
    family = fields["family"]
    if family.definite_parity and not fields["alternating"] and (high - low) % 2:
        high += 1
    check_degree(high)
    return basis_from_descriptor(text, high, low)


def check_degree(n: int) -> None:
    if n > config.MAX_DEGREE:
        raise WindowError(f"degree {n} exceeds the limit of {config.MAX_DEGREE} (POLYBASIS_MAX_DEGREE)")


def basis_pair(
    source: str, target: str, n: Optional[int] = None, m: Optional[int] = None
) -> Tuple[BasisSpec, BasisSpec]:
    """
    Both ends of a change of basis on one window. A monomial end takes the
    other end's window and step, so "zernike" pairs with the even or odd
    monomials. A descriptor window @u,l fills in n and m when they are not
    given; otherwise the window start defaults from the source.
    """
    for window in (descriptor_window(source), descriptor_window(target)):
        if window is not None:
            n = window[0] if n is None else n
            m = window[1] if m is None else m
            break
    if n is None:
        raise WindowError("no window top: pass n or a descriptor window @u,l")
    check_degree(n)
    source_monomial = parse_descriptor(source)["family"] is Family.MONOMIAL
    target_monomial = parse_descriptor(target)["family"] is Family.MONOMIAL
    if source_monomial and target_monomial:
        spec = basis_from_descriptor(source, n, m)
        return spec, spec
    if source_monomial:
        b = basis_from_descriptor(target, n, m)
        return b.hub(), b
    a = basis_from_descriptor(source, n, m)
    if target_monomial:
        return a, a.hub()
    return a, basis_from_descriptor(target, n, a.m)
