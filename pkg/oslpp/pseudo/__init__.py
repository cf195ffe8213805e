from oslpp.pseudo.labelling import ClassMeans, PseudoLabeling, class_means, pseudo_label
from oslpp.pseudo.selection import (
	propagate_rejections,
	seed_rejections,
	select,
	selection_count,
	selection_fraction,
)
