//! Drivers that reproduce the numerical study: discretisation errors and
//! iteration counts, measured reduction rates, the Dirichlet-Neumann
//! comparison, and the spectral and operator reports.

mod config;
mod manufactured;
mod reports;
mod spectrum;
mod table;
mod table1;
mod table2;
mod table3;

pub use config::{
    sevenths, ExperimentConfig, TableKind, FAST_SOLVER_THRESHOLD, TABLE1_N, TABLE2_DEEP_N, TABLE2_N, TABLE3_N,
    TABLE3_THETA,
};
pub use manufactured::{exact_u, manufactured_solution, source_f};
pub use reports::{
    operator_table, run_operator, run_von_neumann, von_neumann_row, von_neumann_table, OperatorRow, Split,
    VonNeumannRow,
};
pub use spectrum::{
    run_spectrum, spectrum_summary_table, spectrum_table, SpectrumReport, SpectrumRow, SpectrumSummary,
};
pub use table::{h_label, Table};
pub use table1::{run_table1, table1_table, Table1Row};
pub use table2::{measure_rate, run_table2, table2_table, RateCell, RATE_STOP};
pub use table3::{run_table3, table3_table, DnCell};
