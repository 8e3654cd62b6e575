pub mod ordinal;
pub mod topology;
pub mod rank;
pub mod fell;
pub mod spectra;
pub mod cli;
