// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Holds the workspace acceptance suite (`tests/acceptance.rs`). It lives in
//! its own package so that `cargo test --workspace` runs it after every
//! other test target.
