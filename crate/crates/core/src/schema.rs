//! JSON Schema (draft 2020-12) documents for every file format the crate reads or writes.

use serde_json::{json, Value};

/// Names accepted by [`schema`].
pub const SCHEMA_TYPES: [&str; 4] = ["dg-algebra", "springer", "truncated-algebra", "zigzag"];

const DIALECT: &str = "https://json-schema.org/draft/2020-12/schema";

fn rational() -> Value {
    json!({ "type": "string", "pattern": "^[+-]?[0-9]+(/[0-9]+)?$" })
}

fn sparse_vector() -> Value {
    json!({
        "type": "object",
        "description": "basis name -> coefficient",
        "additionalProperties": rational()
    })
}

fn image_list() -> Value {
    json!({
        "type": "array",
        "items": { "type": "array", "prefixItems": [{ "type": "string" }, sparse_vector()], "minItems": 2, "maxItems": 2 }
    })
}

fn root_pair() -> Value {
    json!({
        "type": "array",
        "description": "1-based (i, j) for the root e_i - e_j",
        "items": { "type": "integer", "minimum": 1 },
        "minItems": 2,
        "maxItems": 2
    })
}

fn permutation() -> Value {
    json!({ "type": "array", "description": "one-line notation, 1-based", "items": { "type": "integer", "minimum": 1 } })
}

fn count_map() -> Value {
    json!({ "type": "object", "description": "integer degree -> dimension", "additionalProperties": { "type": "integer", "minimum": 0 } })
}

fn dg_algebra_body() -> Value {
    json!({
        "type": "object",
        "required": ["basis", "unit"],
        "additionalProperties": false,
        "properties": {
            "basis": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "required": ["name", "degree"],
                    "additionalProperties": false,
                    "properties": { "name": { "type": "string" }, "degree": { "type": "integer" } }
                }
            },
            "unit": { "type": "string", "description": "name of the unit; products with it default to the unit law" },
            "products": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [{ "type": "string" }, { "type": "string" }, sparse_vector()],
                    "minItems": 3,
                    "maxItems": 3
                }
            },
            "differential": image_list(),
            "automorphism": {
                "allOf": [image_list()],
                "description": "images of F; unlisted basis elements are fixed"
            },
            "r": rational()
        }
    })
}

fn dg_algebra() -> Value {
    let mut v = dg_algebra_body();
    v["$schema"] = json!(DIALECT);
    v["title"] = json!("DgAlgebra");
    v
}

fn springer() -> Value {
    json!({
        "$schema": DIALECT,
        "title": "SteinbergReport",
        "type": "object",
        "required": ["datum", "cells", "poincare", "ext", "totals", "violations"],
        "properties": {
            "datum": {
                "type": "object",
                "required": ["group", "kind", "weight_support", "pieces", "piece_labels", "component_dims"],
                "properties": {
                    "group": {
                        "type": "object",
                        "required": ["n", "levels", "order", "positive_roots"],
                        "properties": {
                            "n": { "type": "integer", "minimum": 1, "maximum": 8 },
                            "levels": { "type": "array", "items": { "type": "integer", "minimum": 0 } },
                            "order": { "type": "integer", "minimum": 1 },
                            "positive_roots": { "type": "array", "items": root_pair() }
                        }
                    },
                    "kind": { "enum": ["nilpotent", "fixed-point"] },
                    "s": { "type": "array", "items": rational() },
                    "q0": rational(),
                    "weight_support": { "type": "array", "items": root_pair() },
                    "pieces": { "type": "array", "items": { "type": "array", "items": root_pair() } },
                    "piece_labels": { "type": "array", "items": permutation() },
                    "component_dims": { "type": "array", "items": { "type": "integer", "minimum": 0 } }
                }
            },
            "cells": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["i", "j", "w", "y", "fiber", "dim"],
                    "properties": {
                        "i": { "type": "integer" },
                        "j": { "type": "integer" },
                        "w": permutation(),
                        "y": permutation(),
                        "fiber": { "type": "integer", "minimum": 0 },
                        "dim": { "type": "integer", "minimum": 0 }
                    }
                }
            },
            "poincare": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["i", "j", "dims"],
                    "properties": {
                        "i": { "type": "integer" },
                        "j": { "type": "integer" },
                        "dims": { "allOf": [count_map()], "description": "m -> dim H_{2m}" }
                    }
                }
            },
            "ext": {
                "type": "object",
                "required": ["entries", "graded", "total"],
                "properties": {
                    "entries": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["i", "j", "k", "dim"],
                            "properties": {
                                "i": { "type": "integer" },
                                "j": { "type": "integer" },
                                "k": { "type": "integer" },
                                "dim": { "type": "integer", "minimum": 1 }
                            }
                        }
                    },
                    "graded": count_map(),
                    "total": { "type": "integer" }
                }
            },
            "weights": {
                "type": "object",
                "required": ["q0", "checked_cells", "rows", "all_consistent"],
                "properties": {
                    "q0": rational(),
                    "sqrt_q": rational(),
                    "checked_cells": { "type": "integer" },
                    "rows": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["i", "j", "m", "k", "cells", "homology_weight", "twist", "ext_weight", "consistent"],
                            "properties": {
                                "i": { "type": "integer" },
                                "j": { "type": "integer" },
                                "m": { "type": "integer" },
                                "k": { "type": "integer" },
                                "cells": { "type": "integer" },
                                "homology_weight": rational(),
                                "twist": rational(),
                                "ext_weight": rational(),
                                "consistent": { "type": "boolean" }
                            }
                        }
                    },
                    "all_consistent": { "type": "boolean" }
                }
            },
            "totals": {
                "type": "object",
                "required": ["components", "cells", "homology", "ext", "hom0"],
                "additionalProperties": { "type": "integer" }
            },
            "violations": { "type": "array", "items": { "type": "string" } }
        }
    })
}

fn truncated_algebra() -> Value {
    json!({
        "$schema": DIALECT,
        "title": "TruncatedAlgebra",
        "type": "object",
        "required": ["n", "s", "q0", "dimension", "basis", "structure"],
        "properties": {
            "n": { "type": "integer", "minimum": 1 },
            "s": { "type": "array", "items": rational() },
            "q0": rational(),
            "dimension": { "type": "integer" },
            "basis": {
                "type": "array",
                "description": "theta_a T_w with a a staircase exponent",
                "items": {
                    "type": "object",
                    "required": ["a", "w"],
                    "properties": {
                        "a": { "type": "array", "items": { "type": "integer", "minimum": 0 } },
                        "w": permutation()
                    }
                }
            },
            "structure": {
                "type": "array",
                "description": "[i, j, k, c]: coefficient c of b_k in b_i b_j, sorted by (i, j, k)",
                "items": {
                    "type": "array",
                    "prefixItems": [{ "type": "integer" }, { "type": "integer" }, { "type": "integer" }, rational()],
                    "minItems": 4,
                    "maxItems": 4
                }
            }
        }
    })
}

fn zigzag() -> Value {
    let check = json!({
        "type": "object",
        "required": ["name", "passed"],
        "properties": { "name": { "type": "string" }, "passed": { "type": "boolean" }, "witness": { "type": "string" } }
    });
    json!({
        "$schema": DIALECT,
        "title": "Zigzag",
        "type": "object",
        "required": ["r", "weights", "algebras", "maps"],
        "properties": {
            "r": rational(),
            "weights": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "degree", "weight"],
                    "properties": { "name": { "type": "string" }, "degree": { "type": "integer" }, "weight": { "type": "integer" } }
                }
            },
            "algebras": {
                "type": "object",
                "required": ["h", "b", "r_tilde", "a"],
                "properties": { "h": dg_algebra_body(), "b": dg_algebra_body(), "r_tilde": dg_algebra_body(), "a": dg_algebra_body() }
            },
            "maps": {
                "type": "object",
                "required": ["projection", "truncation", "inclusion"],
                "properties": { "projection": image_list(), "truncation": image_list(), "inclusion": image_list() }
            },
            "certificate": {
                "type": "object",
                "required": ["algebras", "maps", "all_passed"],
                "properties": {
                    "algebras": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "dimension", "cohomology", "valid"],
                            "properties": {
                                "name": { "type": "string" },
                                "dimension": { "type": "integer" },
                                "cohomology": count_map(),
                                "valid": { "type": "boolean" },
                                "error": { "type": "object" }
                            }
                        }
                    },
                    "maps": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "source", "target", "checks", "source_ranks", "target_ranks", "induced_ranks"],
                            "properties": {
                                "name": { "type": "string" },
                                "source": { "type": "string" },
                                "target": { "type": "string" },
                                "checks": { "type": "array", "items": check },
                                "source_ranks": count_map(),
                                "target_ranks": count_map(),
                                "induced_ranks": count_map()
                            }
                        }
                    },
                    "all_passed": { "type": "boolean" }
                }
            }
        }
    })
}

/// The schema called `name`, one of [`SCHEMA_TYPES`].
pub fn schema(name: &str) -> Option<Value> {
    match name {
        "dg-algebra" => Some(dg_algebra()),
        "springer" => Some(springer()),
        "truncated-algebra" => Some(truncated_algebra()),
        "zigzag" => Some(zigzag()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_type_has_a_schema() {
        for t in SCHEMA_TYPES {
            let s = schema(t).unwrap();
            assert_eq!(s["$schema"], DIALECT);
            assert!(s["title"].is_string());
        }
        assert!(schema("unknown").is_none());
    }
}
