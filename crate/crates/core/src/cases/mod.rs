//! Real-world case studies: three constrained engineering designs, an ODE
//! inverse problem and the iris clustering task.

mod design;
mod iris;
mod vibration;

pub use design::{pressure_vessel_problem, speed_reducer_problem, spring_problem};
pub use iris::{
    clustering_accuracy, clustering_problem, load_iris, ClusterSolution, IrisDataset, IRIS_ATTRS,
    IRIS_CLASSES, IRIS_ROWS,
};
pub use vibration::{
    analytic_reference, rk4_solve, vibration_objective, vibration_problem, OdeConfig,
    VibrationDataset, MEASURED_DISPLACEMENTS, MEASURED_TIMES,
};
