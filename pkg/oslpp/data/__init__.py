from oslpp.data.datasets import (
	LabelSpace,
	SourceDataset,
	TargetDataset,
	as_feature_matrix,
	build_label_space,
	check_compatible,
	remap_unknown,
)
from oslpp.data.feature_io import (
	load_features,
	load_labels,
	load_target_labels,
	save_features,
	save_labels,
)
