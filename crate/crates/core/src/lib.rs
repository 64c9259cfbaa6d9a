pub mod analysis;
pub mod harness;
pub mod irreducibility;
pub mod par;
pub mod polyring;
pub mod registry;
pub mod resultant;
