//! Mining against the recorded replay fixture in `fixtures/replay/basic`.

use std::path::{Path, PathBuf};

use chrono::{TimeZone, Utc};
use snipharness_core::miner::{mine_with, MineQuery, MineStrategy, ReplayClient, RetryPolicy};
use snipharness_core::Store;

fn replay_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/replay/basic")
}

fn january() -> MineQuery {
    MineQuery {
        language_tag: "Python".into(),
        min_stars: 1,
        window_start: Utc.with_ymd_and_hms(2017, 1, 1, 0, 0, 0).unwrap(),
        window_end: Utc.with_ymd_and_hms(2017, 2, 1, 0, 0, 0).unwrap(),
        max_records: 1000,
        page_size: 100,
    }
}

fn mine_once(store: &Store) -> usize {
    let client = ReplayClient::from_dir(&replay_dir()).unwrap();
    mine_with(
        MineStrategy::DateWindow,
        &january(),
        &client,
        store,
        RetryPolicy::immediate(),
    )
    .unwrap()
}

#[test]
fn ten_gists_four_acceptable_and_rerun_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let store = Store::open(dir.path()).unwrap();
    assert_eq!(mine_once(&store), 4);
    let ids = store.list_ids().unwrap();
    assert_eq!(
        ids,
        ["f010c0ffee", "f020c0ffee", "f060c0ffee", "f100c0ffee"]
    );

    // The listing omitted this gist's content; it comes from the fetch.
    let fetched = store.get_snippet("f020c0ffee").unwrap();
    assert_eq!(fetched.source, "from bs4 import BeautifulSoup\n");
    assert_eq!(fetched.stars, 1);
    assert!(dir.path().join("f020c0ffee/snippet.py").is_file());

    assert_eq!(mine_once(&store), 4);
    assert_eq!(store.list_ids().unwrap().len(), 4);
}

#[test]
fn narrower_star_threshold_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let store = Store::open(dir.path()).unwrap();
    let client = ReplayClient::from_dir(&replay_dir()).unwrap();
    let mut query = january();
    query.min_stars = 2;
    assert_eq!(
        mine_with(
            MineStrategy::DateWindow,
            &query,
            &client,
            &store,
            RetryPolicy::immediate()
        )
        .unwrap(),
        2
    );
    query.min_stars = 0;
    query.max_records = 1;
    let client = ReplayClient::from_dir(&replay_dir()).unwrap();
    assert_eq!(
        mine_with(
            MineStrategy::DateWindow,
            &query,
            &client,
            &store,
            RetryPolicy::immediate()
        )
        .unwrap(),
        1
    );
}
