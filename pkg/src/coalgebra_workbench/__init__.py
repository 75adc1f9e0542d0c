"""Coalgebra Workbench - exact comodule/contramodule duality for finite coalgebras."""

__version__ = "0.1.0"

from coalgebra_workbench.coalgebra import Algebra, Coalgebra, check_algebra, check_coalgebra
from coalgebra_workbench.comodules import Comodule, Contramodule, check_comodule, check_contramodule
from coalgebra_workbench.config import WorkbenchConfig
from coalgebra_workbench.cotensor import Bicomodule, RightComodule
from coalgebra_workbench.field import GF, QQ, FieldSpec
from coalgebra_workbench.matrix import Matrix
from coalgebra_workbench.models import CertReport, Report
from coalgebra_workbench.resolver import NameResolver
from coalgebra_workbench.towers import FiniteTower

__all__ = [
    "Algebra",
    "Bicomodule",
    "CertReport",
    "Coalgebra",
    "Comodule",
    "Contramodule",
    "FieldSpec",
    "FiniteTower",
    "GF",
    "Matrix",
    "NameResolver",
    "QQ",
    "Report",
    "RightComodule",
    "WorkbenchConfig",
    "check_algebra",
    "check_coalgebra",
    "check_comodule",
    "check_contramodule",
    "__version__",
]
