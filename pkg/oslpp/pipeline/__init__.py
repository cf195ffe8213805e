from oslpp.pipeline.projection import learn_projection, objective_value
from oslpp.pipeline.runner import Hyperparams, IterationRecord, IterationTrace, OsdaResult, run
