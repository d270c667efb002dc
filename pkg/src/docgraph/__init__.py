"""docgraph: spatial dependency parsing for semi-structured documents.

Documents arrive as bags of text tokens with 2D quad coordinates (no
reading order). A relative-position transformer encoder contextualizes the
tokens, a pairwise scorer predicts two directed relations (rel-s for
serialization, rel-g for grouping), and a deterministic decoder turns the
binarized relation matrices into hierarchical key-value parses.
"""

FORMAT_VERSION = "1"

__version__ = "0.1.0"
