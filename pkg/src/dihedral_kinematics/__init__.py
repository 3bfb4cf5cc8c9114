"""Quantum kinematics and coherent states on the periodic chain Z_n with
dihedral symmetry D_n."""

from .dihedral import (
    ConfigPoint,
    CosetDecomposition,
    DihedralElement,
    IncompatibleOrderError,
    Kind,
    M,
    R,
    act,
    coset_decomposition,
    enumerate_group,
    inverse,
    multiply,
    parse_element,
)
from .kinematics import (
    MirrorSpectrum,
    ProjectionMeasure,
    Rep,
    StabilizerIrrep,
    SystemOfImprimitivity,
    induce_rep,
    momentum_operator,
    mirror_spectrum,
    parity_generator,
    position_operator,
    rep_closed_form,
    rotation_spectrum,
    standard_pvm,
    verify_imprimitivity,
)
from .coherent import (
    CoherentState,
    VacuumVector,
    WeylLabel,
    coherent_state,
    overlap,
    position_probability,
    resolution_of_unity,
    vacuum,
    weyl_operator,
)

__version__ = "0.1.0"
