# SPDX-License-Identifier: Apache-2.0
# -*- coding: utf-8 -*-
from .equilibria import (OPEN_SET, RING_CONTINUUM, RING_POINT, EquilibriumSet,
                         dist_to_equilibrium, equilibrium_set,
                         state_space_diameter_bound)
from .functions import (LyapunovSample, QuadraticSandwich,
                        fit_quadratic_sandwich, hdot_analytic,
                        hdot_chain_rule, hdot_chain_rule_terms, lyapunov_H,
                        lyapunov_sample, lyapunov_U)
from .level_sets import LevelSetBounds, level_set_bounds
from .open_road import ExponentialRegime, prop2_bound, prop3_check
from .rates import RateConstants, mu_n, oracle_mu_n, rate_omega_bar

__all__ = [
    'LyapunovSample', 'QuadraticSandwich', 'lyapunov_H', 'lyapunov_U',
    'hdot_analytic', 'hdot_chain_rule', 'hdot_chain_rule_terms',
    'lyapunov_sample', 'fit_quadratic_sandwich', 'LevelSetBounds',
    'level_set_bounds', 'RateConstants', 'mu_n', 'oracle_mu_n',
    'rate_omega_bar', 'EquilibriumSet', 'RING_CONTINUUM', 'RING_POINT',
    'OPEN_SET', 'equilibrium_set', 'dist_to_equilibrium',
    'state_space_diameter_bound', 'ExponentialRegime', 'prop2_bound',
    'prop3_check'
]
