# --------------------------------------------------------------------------------------
# This code is part of graphck.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
# --------------------------------------------------------------------------------------
"""
The `verification` module provides the seeded property suite that checks the algebraic identities of the library against each other and against the matrix models.

    - :mod:`graphck.verification.suite_config`, define the class `SuiteConfig` that holds the parameters of a verification run.


    - :mod:`graphck.verification.properties`, define the class `Property` and the registry `PROPERTIES` of checked properties.


    - :mod:`graphck.verification.suite`, define `run_suite`, the classes `SuiteReport` and `PropertyRecord`, the failure `replay` and the `faithfulness_probe`.


The seeded generators of paths, path sets and elements are defined in :mod:`graphck.verification.sampling`.
"""

from .properties import PROPERTIES, Property, PropertyFailure
from .suite import (
    ProbeReport,
    PropertyRecord,
    ReplayOutcome,
    SuiteReport,
    faithfulness_probe,
    load_witness,
    replay,
    run_suite,
)
from .suite_config import SuiteConfig

__all__ = [
    "PROPERTIES",
    "ProbeReport",
    "Property",
    "PropertyFailure",
    "PropertyRecord",
    "ReplayOutcome",
    "SuiteConfig",
    "SuiteReport",
    "faithfulness_probe",
    "load_witness",
    "replay",
    "run_suite",
]
