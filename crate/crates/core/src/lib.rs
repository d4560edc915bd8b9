pub mod algebra;
pub mod catalog;
pub mod exactmath;
pub mod json;
pub mod kantor;
pub mod liebuild;
pub mod report;
pub mod triality;
