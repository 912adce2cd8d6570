"""The five conditional sets from the worked examples, with their target events."""

from credal_intervals.models import (
    BALL_FRAME,
    ball_urn_given_red_white,
    ball_urn_modified_given_red_white,
    two_urns_given_red,
    two_urns_given_red_with_midpoint,
    two_urns_perturbed_given_red,
    urn1,
    urn2,
)


def worked_examples():
    urns = (urn1(), urn2())
    balls = (BALL_FRAME.event("r"), BALL_FRAME.event("w"))
    return {
        "two-urns": (two_urns_given_red(), urns),
        "ball-urn": (ball_urn_given_red_white(), balls),
        "ball-urn-modified": (ball_urn_modified_given_red_white(), balls),
        "two-urns-midpoint": (two_urns_given_red_with_midpoint(), urns),
        "two-urns-perturbed": (two_urns_perturbed_given_red(1e-6), urns),
    }
