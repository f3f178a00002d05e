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
"""Combinatorics-on-words helpers."""


def thue_morse(n: int) -> int:
    """Return the ``n``-th term of the Thue–Morse sequence 0, 1, 1, 0, 1, 0, 0, 1, ...

    The term is the parity of the number of ones in the binary expansion of
    ``n``. The sequence is overlap-free: no factor has the form ``axaxa``.

    Parameters:
        n (int): Nonnegative index.

    Returns:
        int: 0 or 1.

    Raises:
        ValueError: If ``n`` is negative.

    """
    if n < 0:
        raise ValueError(f"Thue-Morse index must be nonnegative, got {n}")
    return n.bit_count() & 1
