# Copyright 2026 The dpalpha Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Power-law exponent estimation under edge differential privacy."""

from ._core import (
    AlphaEstimate,
    IoError,
    ParseError,
    PrivacyBudget,
    ProtocolError,
    TailConfig,
    TailStats,
    central_estimate,
    degrees_from_edges,
    fit_discrete_approx,
    fit_numerical,
    isotonic_regression,
    laplace_from_uniform,
    load_degrees,
    local_estimate,
    log_likelihood,
    pmf,
    run_experiment,
    sample_degrees,
    sens_check,
    sensitivity_log_stat,
    sensitivity_t_disc,
    split_budget,
    tail_stats,
    zeta_trunc,
)

__all__ = [
    "AlphaEstimate",
    "IoError",
    "ParseError",
    "PrivacyBudget",
    "ProtocolError",
    "TailConfig",
    "TailStats",
    "central_estimate",
    "degrees_from_edges",
    "fit_discrete_approx",
    "fit_numerical",
    "isotonic_regression",
    "laplace_from_uniform",
    "load_degrees",
    "local_estimate",
    "log_likelihood",
    "pmf",
    "run_experiment",
    "sample_degrees",
    "sens_check",
    "sensitivity_log_stat",
    "sensitivity_t_disc",
    "split_budget",
    "tail_stats",
    "zeta_trunc",
]
