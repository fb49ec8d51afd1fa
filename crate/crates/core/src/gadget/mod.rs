//! Locally dense gadget certification.
