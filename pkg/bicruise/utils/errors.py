# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
"""Exception hierarchy shared by every layer of the lab."""


class BicruiseError(Exception):
    """Base class for all errors raised by bicruise."""


class DomainError(BicruiseError, ValueError):
    """A state or spacing lies outside the open state space.

    Raised when a spacing is at or below the safety distance or a speed is
    outside ``(0, v_max)``; the caller has already left the state space.
    """


class ArgumentError(BicruiseError, ValueError):
    """An argument is outside the range an operation accepts."""


class ConfigurationError(BicruiseError):
    """Parameters are inconsistent or an operation does not apply to them."""


class ScenarioError(ConfigurationError):
    """A scenario failed validation.

    Args:
        invariant (str): Short name of the violated invariant.
        message (str): Human readable explanation.
    """

    def __init__(self, invariant, message):
        self.invariant = invariant
        super(ScenarioError, self).__init__('[{}] {}'.format(invariant, message))


class IntegrationError(BicruiseError):
    """Integration stopped before reaching ``t_end``."""

    def __init__(self, reason, t):
        self.reason = reason
        self.t = t
        super(IntegrationError, self).__init__(
            'integration stopped at t={:.6g}: {}'.format(t, reason))
