from oslpp.numerics.linalg import Projection, fix_signs, l2_normalize_rows, pairwise_sq_dists, solve_gev
from oslpp.numerics.pca import PcaModel, fit_pca, pca_transform
