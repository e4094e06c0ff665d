use kuratowski::harness::{run_campaign, Campaign, CampaignParams};

fn params(parallel: bool) -> CampaignParams {
    CampaignParams { max_n: Some(5), samples: 40, seed: 11, parallel }
}

#[test]
fn parallel_reports_match_serial() {
    for c in Campaign::ALL {
        if c == Campaign::KuratowskiDedup7 {
            continue;
        }
        let serial = run_campaign(c, &params(false)).unwrap();
        let parallel = run_campaign(c, &params(true)).unwrap();
        assert_eq!(serial.to_key_values(), parallel.to_key_values(), "{}", c.name());
        assert!(serial.passed(), "{}", serial.to_text());
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for c in [Campaign::Lifting, Campaign::Menger, Campaign::Kuratowski] {
        let a = run_campaign(c, &params(false)).unwrap().to_key_values();
        let b = run_campaign(c, &params(false)).unwrap().to_key_values();
        assert_eq!(a, b);
    }
}

#[test]
fn different_seeds_sample_different_graphs() {
    let a = run_campaign(Campaign::Lifting, &params(false)).unwrap();
    let b = run_campaign(Campaign::Lifting, &CampaignParams { seed: 12, ..params(false) }).unwrap();
    assert_ne!(a.counters, b.counters);
}
