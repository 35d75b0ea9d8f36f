from .analytic import LogFixture, Polynomial, compose_with_mobius
from .bounds import ConstantSet, constant_set
from .disk_geometry import DiskPoint, MobiusTransform, pseudo_distance
from .harmonic import HarmonicMap, bundle_at
from .seminorms import SupConfig, SupEstimate, harmonic_bloch_seminorm
from .verify import run_campaign, sharpness_search
