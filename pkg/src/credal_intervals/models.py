"""Small reference models: two urns, and an urn of red/white/black balls."""

from __future__ import annotations

from .core import CredalSet, Frame, MassAssignment, SubDistribution, credal_from_mass, distribution
from .conditioning import WeightedConditionalSet, possibility_condition

URN_FRAME = Frame(["u1r", "u1w", "u2r", "u2w"])
BALL_FRAME = Frame(["r", "w", "b"])


def two_urns() -> CredalSet:
    """Urn 1 has 999 red balls and 1 white, urn 2 the reverse; the urn choice is unknown."""
    f = URN_FRAME
    return CredalSet(
        f,
        (
            distribution(f, {"u1r": 0.999, "u1w": 0.001}),
            distribution(f, {"u2r": 0.001, "u2w": 0.999}),
        ),
        canonical=True,
    )


def two_urns_given_red() -> WeightedConditionalSet:
    return possibility_condition(two_urns(), URN_FRAME.event("u1r", "u2r"))


def urn1() -> "Event":
    return URN_FRAME.event("u1r", "u1w")


def urn2() -> "Event":
    return URN_FRAME.event("u2r", "u2w")


def two_urns_given_red_with_midpoint() -> WeightedConditionalSet:
    """Adds the restricted point normalizing to (1/2, 1/2), possibility 0.002.

    The point lies on the segment between the two restricted generators, so it
    is kept only because the set is built directly, without canonicalization.
    """
    base = two_urns_given_red()
    mid = SubDistribution(URN_FRAME, (0.000999, 0.0, 0.000999, 0.0))
    return WeightedConditionalSet(URN_FRAME, base.given, base.generators + (mid,))


def two_urns_perturbed(eps: float = 1e-6) -> CredalSet:
    """Two urns plus a third extreme point restricting to (0.000999 +- eps) on red."""
    f = URN_FRAME
    red1, red2 = 0.000999 + eps, 0.000999 - eps
    p3 = distribution(f, {"u1r": red1, "u1w": 1.0 - red1 - red2, "u2r": red2})
    return CredalSet(f, two_urns().generators + (p3,), canonical=True)


def two_urns_perturbed_given_red(eps: float = 1e-6) -> WeightedConditionalSet:
    return possibility_condition(two_urns_perturbed(eps), URN_FRAME.event("u1r", "u2r"))


def ball_urn_mass() -> MassAssignment:
    """10 red, 10 white and 20 balls that are red or black."""
    return MassAssignment.from_dict(BALL_FRAME, {"r": 0.25, "w": 0.25, ("r", "b"): 0.5})


def ball_urn() -> CredalSet:
    return credal_from_mass(ball_urn_mass())


def ball_urn_given_red_white() -> WeightedConditionalSet:
    return possibility_condition(ball_urn(), BALL_FRAME.event("r", "w"))


def ball_urn_modified() -> CredalSet:
    f = BALL_FRAME
    third = 1.0 / 3.0
    return CredalSet(
        f,
        (
            distribution(f, {"r": third, "w": third, "b": 1.0 - 2 * third}),
            distribution(f, {"r": 0.0, "w": third, "b": 1.0 - third}),
        ),
        canonical=True,
    )


def ball_urn_modified_given_red_white() -> WeightedConditionalSet:
    return possibility_condition(ball_urn_modified(), BALL_FRAME.event("r", "w"))
