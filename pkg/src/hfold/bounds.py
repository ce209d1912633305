"""Lower bounds on |hA| and the structural conclusions attached to them.

Functions that assume ``0 = a_0`` and ``gcd(A) = 1`` take a normal-form
set (or a :class:`~hfold.core.NormalizedSet`) and verify the hypothesis
instead of renormalizing silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .core import IntSet, NormalizedSet, as_normal_form, minimal_ap_cover_length
from .errors import InvalidParams, TooSmall
from .sumset import h_fold_cardinality

NormalInput = Union[NormalizedSet, IntSet]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one bound on one set.

    ``context["direction"]`` is ``"lower"`` (holds iff actual >= bound) or
    ``"upper"`` (holds iff actual <= bound). Vacuous instances carry
    ``context["vacuous"] = True`` and always hold.
    """

    name: str
    bound_value: Optional[int]
    actual: int
    holds: bool
    context: dict = field(default_factory=dict)


def theorem_a_bound(h: int, k: int) -> int:
    """Minimum possible |hA| for |A| = k: ``hk - h + 1``."""
    if h < 2 or k < 1:
        raise InvalidParams(f"need h >= 2 and k >= 1, got h={h}, k={k}")
    return h * k - h + 1


def freiman_2a_bound(N: NormalInput) -> int:
    """``min(a_{k-1}, 2k - 3) + k``, a lower bound on |2A| for normal-form A, k >= 3."""
    S = as_normal_form(N)
    if S.k < 3:
        raise TooSmall(f"need k >= 3, got k={S.k}")
    return min(S.max, 2 * S.k - 3) + S.k


def _lev_params(N: NormalInput, h: int) -> IntSet:
    S = as_normal_form(N)
    if h < 2 or S.k < 2:
        raise InvalidParams(f"need h >= 2 and k >= 2, got h={h}, k={S.k}")
    return S


def lev_step_bound(N: NormalInput, h: int, prev_card: int) -> int:
    """``|(h-1)A| + min(a_{k-1}, h(k-2) + 1)`` with ``prev_card = |(h-1)A|``."""
    S = _lev_params(N, h)
    return prev_card + min(S.max, h * (S.k - 2) + 1)


def lev_chain_bound(N: NormalInput, h: int) -> int:
    """The step bound unrolled down to |A|: ``k + sum_{t=2..h} min(a_{k-1}, t(k-2) + 1)``."""
    S = _lev_params(N, h)
    k, top = S.k, S.max
    return k + sum(min(top, t * (k - 2) + 1) for t in range(2, h + 1))


def lemma1_diameter_bound(h: int, k: int, card: int) -> Optional[int]:
    """Largest possible diameter of a normal-form A with |A| = k and |hA| = card.

    Returns None when card is above ``hk + 2h - 3``, where no bound is known.
    """
    if h < 2 or k < 5:
        raise InvalidParams(f"need h >= 2 and k >= 5, got h={h}, k={k}")
    if card <= h * k + h - 2:
        return k
    if card <= h * k + 2 * h - 3:
        return k + 1
    return None


def theorem_d_check(A: IntSet) -> BoundReport:
    """If ``|2A| = 2k - 1 + b <= 3k - 4``, A must lie in an AP of length k + b."""
    k = A.k
    if k < 3:
        raise TooSmall(f"need k >= 3, got k={k}")
    card = h_fold_cardinality(A, 2)
    cover = minimal_ap_cover_length(A)
    ctx = {"direction": "upper", "h": 2, "k": k, "card": card, "diameter": A.diameter}
    if card > 3 * k - 4:
        ctx.update(b=None, vacuous=True)
        return BoundReport("theorem_d", None, cover, True, ctx)
    b = card - (2 * k - 1)
    ctx.update(b=b, vacuous=False)
    return BoundReport("theorem_d", k + b, cover, cover <= k + b, ctx)
