/**
 * Shapes of bundle.json as produced by the pipeline's `build` command.
 *
 * Everything here is plain parsed JSON. Arrays indexed by researcher
 * (coords, labels, query_index.columns) are parallel to the top-level
 * `researchers` array; the bundle is immutable after load.
 */

export interface ResearcherRecord {
  id: string;
  name: string;
  affiliation: string;
  position: string;
  total_citations: number;
  scholar_url: string;
  keywords: string[];
  /** true when the researcher had no usable text in any variant */
  insufficient_data: boolean;
}

export interface GaussianComponent {
  weight: number;
  mean: number[];
  covariance: number[][];
}

/**
 * Precomputed confidence region of one mixture component: centered at the
 * component mean, semi-axes along the covariance eigenvectors (major axis
 * first), angle of the major axis in radians within [0, pi).
 */
export interface EllipseSpec {
  center: number[];
  semi_axes: number[];
  angle: number;
}

export interface Clustering {
  k: number;
  /** one label per researcher; -1 marks insufficient-data rows */
  labels: number[];
  log_likelihood: number;
  n_iterations: number;
  converged: boolean;
  components: GaussianComponent[];
  ellipses: EllipseSpec[];
}

/**
 * Sparse unit-L2 researcher columns for client-side query scoring.
 *
 * Row r of the local term space corresponds to the global vocabulary
 * entry term_ids[r]; idf[r] is that term's inverse document frequency.
 * Column i lists its nonzero rows in `ids` (ascending) with matching
 * `weights`.
 */
export interface SerializedQueryIndex {
  term_ids: number[];
  idf: number[];
  columns: { ids: number[]; weights: number[] }[];
}

export interface Variant {
  emphasis: string;
  pubset: string;
  coords: number[][];
  explained_variance: number[];
  /** researcher indices parked at the centroid for lack of text */
  insufficient: number[];
  clusterings: Clustering[];
  query_index: SerializedQueryIndex;
}

export interface BundleConstants {
  emphasis_weights: Record<string, number>;
  publication_limit: number;
  k_min: number;
  k_max: number;
  ellipse_radius: number;
  normalizer_version: string;
}

export interface AtlasBundle {
  schema_version: number;
  source_label: string;
  constants: BundleConstants;
  researchers: ResearcherRecord[];
  vocabulary: string[];
  variants: Record<string, Variant>;
}
