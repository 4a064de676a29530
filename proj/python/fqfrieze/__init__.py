"""Tame friezes over finite fields."""

from ._fqfrieze import (
    BudgetExceeded,
    a_kn,
    configuration_to_frieze,
    count_configurations,
    count_cyclic_partitions,
    count_friezes,
    count_moduli,
    count_moduli_plus,
    enumerate_friezes,
    field_order,
    frieze_rows,
    frieze_to_configuration,
    matrix_criterion,
    moduli_orbits,
    render_frieze,
    run_cli,
)

__all__ = [
    "BudgetExceeded",
    "a_kn",
    "configuration_to_frieze",
    "count_configurations",
    "count_cyclic_partitions",
    "count_friezes",
    "count_moduli",
    "count_moduli_plus",
    "enumerate_friezes",
    "field_order",
    "frieze_rows",
    "frieze_to_configuration",
    "matrix_criterion",
    "moduli_orbits",
    "render_frieze",
    "run_cli",
]
