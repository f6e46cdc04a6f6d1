"""Internal homs ``x => y`` by exhaustive search."""

from functools import lru_cache
from typing import NamedTuple, Optional

from laxcat.core.exceptions import MissingExponential
from laxcat.core.utils.logger import get_logger
from laxcat.fincat.category import FinCategory
from laxcat.univprop.limits import Product, product_map, require_product

logger = get_logger(__name__)


class Exponential(NamedTuple):
    """``apex = x => y`` with ``ev: apex × x -> y``."""

    x: str
    y: str
    apex: str
    product: Product
    ev: str


def _curries_uniquely(c: FinCategory, x: str, y: str, apex: str, ev: str) -> bool:
    ex = require_product(c, apex, x)
    for z in c.objects:
        zx = require_product(c, z, x)
        seen = set()
        for g in c.hom(z, apex):
            seen.add(c.compose(ev, product_map(c, zx, ex, g, c.identity(x))))
        if len(seen) != len(c.hom(z, apex)) or seen != set(c.hom(zx.apex, y)):
            return False
    return True


@lru_cache(maxsize=4096)
def find_exponential(c: FinCategory, x: str, y: str) -> Optional[Exponential]:
    """
    The canonically least ``(x => y, ev)``.

    ``ev`` is universal when, for every object z, currying
    ``g ↦ ev∘(g × id_x)`` is a bijection ``Hom(z, e) -> Hom(z × x, y)``.

    Raises:
        MissingProducts: if some product ``z × x`` does not exist
    """
    for apex in c.objects:
        product = require_product(c, apex, x)
        for ev in c.hom(product.apex, y):
            if _curries_uniquely(c, x, y, apex, ev):
                logger.debug(f"{x}=>{y} in {c.name} is {apex}")
                return Exponential(x, y, apex, product, ev)
    return None


def require_exponential(c: FinCategory, x: str, y: str) -> Exponential:
    exp = find_exponential(c, x, y)
    if exp is None:
        raise MissingExponential(x, y)
    return exp


def curry(c: FinCategory, exp: Exponential, z: str, g: str) -> str:
    """The transpose ``z -> (x => y)`` of ``g: z × x -> y``."""
    zx = require_product(c, z, exp.x)
    for m in c.hom(z, exp.apex):
        if c.compose(exp.ev, product_map(c, zx, exp.product, m, c.identity(exp.x))) == g:
            return m
    raise MissingExponential(exp.x, exp.y)


def exponential_map(c: FinCategory, source: Exponential, target: Exponential, p: str, q: str) -> str:
    """
    The action ``(p => q): (x => y) -> (x' => y')`` for ``p: x' -> x``
    and ``q: y -> y'``: the unique m with
    ``ev'∘(m × id_x') = q∘ev∘(id × p)``.
    """
    e = source.apex
    ex_prime = require_product(c, e, target.x)
    want = c.compose_path(q, source.ev, product_map(c, ex_prime, source.product, c.identity(e), p))
    for m in c.hom(e, target.apex):
        if c.compose(target.ev, product_map(c, ex_prime, target.product, m, c.identity(target.x))) == want:
            return m
    raise MissingExponential(target.x, target.y)
