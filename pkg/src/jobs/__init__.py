"""
Comandos do cfnet (um job por subcomando da CLI).
"""

from .coeffs import CoeffsJob
from .compose import ComposeJob
from .simulate import SimulateJob
from .verify import VerifyJob
from .selftest import SelftestJob

JOBS = {
    CoeffsJob.command: CoeffsJob,
    ComposeJob.command: ComposeJob,
    SimulateJob.command: SimulateJob,
    VerifyJob.command: VerifyJob,
    SelftestJob.command: SelftestJob,
}

__all__ = ["CoeffsJob", "ComposeJob", "SimulateJob", "VerifyJob", "SelftestJob", "JOBS"]
