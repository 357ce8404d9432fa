"""Layered-circuit training with network-generated parameters.

Everything lives in the compiled core; this package just re-exports it.
"""

from vqcnet._core import (
    ALPHA_DIM,
    MAX_QUBITS,
    circuit_cost,
    circuit_gradient,
    circuit_state,
    encode,
    haar_unitary,
    identity_proximity,
    lemma1,
    lemma2,
    lemma3,
    local_cost,
    network_theta,
    sweep,
    train,
    training_input,
    variance_scan,
)

__all__ = [
    "ALPHA_DIM",
    "MAX_QUBITS",
    "circuit_cost",
    "circuit_gradient",
    "circuit_state",
    "encode",
    "haar_unitary",
    "identity_proximity",
    "lemma1",
    "lemma2",
    "lemma3",
    "local_cost",
    "network_theta",
    "sweep",
    "train",
    "training_input",
    "variance_scan",
]
