# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

from permuton.helpers import PermutonException
from permuton.Permutation import Permutation, PermutationException
from permuton.PointSet import PointSet, PointSetException
from permuton.Rect import Rect, RectException
from permuton.MallowsParams import BetaSchedule, MallowsParams, ParameterException, q_from_beta
from permuton.SeedSpec import SeedSpec
from permuton.LehmerCode import LehmerCode, LehmerCodeException
from permuton.MallowsSampler import MallowsSampler
from permuton.DensityParams import DensityParams, RhoParams
from permuton.Quadrature import Quadrature, QuadratureException
from permuton.LimitDensity import DensityException, LimitDensity
from permuton.ProductDensity import ProductDensity
from permuton.EmpiricalMeasure import EmpiricalMeasure
from permuton.GridCounts import GridCounts
from permuton.DiscrepancyReport import DiscrepancyReport
from permuton.Statistics import ks_statistic
from permuton.CheckResult import CheckResult
from permuton.ExactDistribution import ExactDistribution, OracleException
from permuton.Verification import Verification
from permuton.ExperimentConfig import ConfigurationException, ExperimentConfig
from permuton.ExperimentReport import ExperimentReport
from permuton.Experiment import Experiment
from permuton.Application import Application

__version__ = '0.1.0'
