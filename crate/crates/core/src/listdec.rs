//! Reed-Solomon list-decoding configurations.
