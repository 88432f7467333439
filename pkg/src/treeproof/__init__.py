"""treeproof: entailment-tree NLI verification with a built-in prover.

Pipeline: construct an entailment tree over premises and a hypothesis,
decompose each statement into atomic propositions, autoformalise the atoms
into event-based first-order logic through staged substitutions, verify the
tree bottom-up with a resolution prover, and repair failing subtrees through
localized, diagnostic-guided refinement.
"""

__version__ = "0.1.0"
