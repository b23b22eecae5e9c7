pub mod module;
pub mod oracle;
pub mod ring;
pub mod scalar;
pub mod text;
pub mod topology;
pub mod verify;
