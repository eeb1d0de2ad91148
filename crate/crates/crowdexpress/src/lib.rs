//! Package transport over hitchhiking taxi rides.
//!
//! Occupied taxis relay packages between interchange stations: an offline
//! stage mines origin-destination taxi trips into a station graph whose
//! edges carry per-time-slot travel-time distributions and mean waiting
//! times, and an online stage decides, per incoming taxi request, whether a
//! waiting package should hitchhike now or hold out for a better ride, by
//! comparing maximum arriving-on-time probabilities.
//!
//! Module map:
//!
//! * [`geo`], [`timeslot`], [`pmf`], [`network`], [`trajectory`],
//!   [`package`] — shared domain types.
//! * [`builder`] — offline pipeline: station clustering, flow extraction,
//!   edge estimation; [`refpaths`] — per-slot min/max reference paths.
//! * [`prob`] — arriving-on-time probabilities: exact bin convolution along
//!   a path, branch-trimmed search for the maximum, and a brute-force
//!   enumerator kept as an oracle.
//! * [`sched`] — online dispatch decisions (maxProb and the FCFS,
//!   DesCloser, Direct baselines).
//! * [`sim`] — deterministic replay of taxi request streams against package
//!   workloads, synthetic stream generation, parameter sweeps.

pub mod builder;
pub mod clock;
pub mod demo;
pub mod geo;
pub mod network;
pub mod package;
pub mod pmf;
pub mod prob;
pub mod refpaths;
pub mod sched;
pub mod sim;
pub mod timeslot;
pub mod trajectory;

pub use geo::GeoPoint;
pub use network::{
    Edge, EdgeSlot, NetworkBuildConfig, PopularityClass, Station, StationId, TransportNetwork,
};
pub use pmf::TravelTimePmf;
pub use timeslot::{Calendar, DayType, SlotId, TimeSlotScheme, WeekdayCalendar};
