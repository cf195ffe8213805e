from oslpp.metrics.evaluation import EvalReport, average_scores, evaluate, hos
