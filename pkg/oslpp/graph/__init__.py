from oslpp.graph.similarity import (
	SimilarityGraph,
	TargetState,
	TargetStatus,
	build_similarity,
	laplacian,
	states_from_decisions,
)
