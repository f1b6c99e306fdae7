// Generated by scoring_reference.py; do not edit by hand.
pub struct ScoringCase {
    pub budget_s: u64,
    pub consumed_s: f64,
    pub suites: (u64, u64),
    pub tests: (u64, u64),
    pub lines: (u64, u64),
    pub branches: (u64, u64),
    pub mutants: (u64, u64),
    pub time_factor: f64,
    pub penalty: f64,
    pub score: f64,
}

pub const CASES: &[ScoringCase] = &[
    ScoringCase {
        budget_s: 10,
        consumed_s: 12.0,
        suites: (4, 0),
        tests: (20, 0),
        lines: (10, 10),
        branches: (10, 10),
        mutants: (10, 10),
        time_factor: 1.0,
        penalty: 0.0,
        score: 7.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 20.0,
        suites: (4, 0),
        tests: (20, 0),
        lines: (10, 10),
        branches: (10, 10),
        mutants: (10, 10),
        time_factor: 1.0,
        penalty: 0.0,
        score: 7.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 25.0,
        suites: (4, 0),
        tests: (20, 0),
        lines: (10, 10),
        branches: (10, 10),
        mutants: (10, 10),
        time_factor: 0.8,
        penalty: 0.0,
        score: 5.6,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 40.0,
        suites: (4, 0),
        tests: (20, 0),
        lines: (10, 5),
        branches: (8, 3),
        mutants: (6, 2),
        time_factor: 0.5,
        penalty: 0.0,
        score: 1.2916666666666667,
    },
    ScoringCase {
        budget_s: 30,
        consumed_s: 61.5,
        suites: (3, 1),
        tests: (12, 2),
        lines: (9, 7),
        branches: (6, 4),
        mutants: (11, 5),
        time_factor: 0.975609756097561,
        penalty: 0.5,
        score: 3.333456516383346,
    },
    ScoringCase {
        budget_s: 60,
        consumed_s: 0.0,
        suites: (2, 0),
        tests: (7, 0),
        lines: (13, 2),
        branches: (4, 1),
        mutants: (9, 0),
        time_factor: 1.0,
        penalty: 0.0,
        score: 0.6538461538461539,
    },
    ScoringCase {
        budget_s: 60,
        consumed_s: 300.0,
        suites: (5, 2),
        tests: (33, 11),
        lines: (40, 31),
        branches: (22, 9),
        mutants: (17, 13),
        time_factor: 0.4,
        penalty: 0.7333333333333333,
        score: 1.1274688057040998,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 5.0,
        suites: (0, 0),
        tests: (0, 0),
        lines: (10, 0),
        branches: (10, 0),
        mutants: (10, 0),
        time_factor: 1.0,
        penalty: 2.0,
        score: -2.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 30.0,
        suites: (3, 3),
        tests: (0, 0),
        lines: (10, 0),
        branches: (10, 0),
        mutants: (10, 0),
        time_factor: 0.6666666666666666,
        penalty: 2.0,
        score: -2.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 8.0,
        suites: (1, 0),
        tests: (3, 3),
        lines: (5, 5),
        branches: (2, 2),
        mutants: (4, 4),
        time_factor: 1.0,
        penalty: 1.0,
        score: 6.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 8.0,
        suites: (1, 0),
        tests: (3, 1),
        lines: (5, 5),
        branches: (2, 2),
        mutants: (4, 4),
        time_factor: 1.0,
        penalty: 0.3333333333333333,
        score: 6.666666666666667,
    },
    ScoringCase {
        budget_s: 30,
        consumed_s: 59.999,
        suites: (6, 1),
        tests: (50, 0),
        lines: (100, 37),
        branches: (64, 21),
        mutants: (80, 44),
        time_factor: 1.0,
        penalty: 0.16666666666666666,
        score: 3.0595833333333333,
    },
    ScoringCase {
        budget_s: 30,
        consumed_s: 60.001,
        suites: (6, 1),
        tests: (50, 0),
        lines: (100, 37),
        branches: (64, 21),
        mutants: (80, 44),
        time_factor: 0.9999833336111065,
        penalty: 0.16666666666666666,
        score: 3.0595295633961657,
    },
    ScoringCase {
        budget_s: 120,
        consumed_s: 1000.0,
        suites: (2, 1),
        tests: (4, 1),
        lines: (7, 3),
        branches: (2, 1),
        mutants: (3, 1),
        time_factor: 0.24,
        penalty: 0.75,
        score: -0.08714285714285715,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 20.0,
        suites: (4, 0),
        tests: (20, 0),
        lines: (0, 0),
        branches: (0, 0),
        mutants: (0, 0),
        time_factor: 1.0,
        penalty: 0.0,
        score: 0.0,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 19.0,
        suites: (4, 1),
        tests: (20, 5),
        lines: (12, 12),
        branches: (0, 0),
        mutants: (9, 9),
        time_factor: 1.0,
        penalty: 0.5,
        score: 4.5,
    },
    ScoringCase {
        budget_s: 300,
        consumed_s: 123.4,
        suites: (8, 0),
        tests: (64, 0),
        lines: (55, 54),
        branches: (30, 29),
        mutants: (45, 40),
        time_factor: 1.0,
        penalty: 0.0,
        score: 6.47070707070707,
    },
    ScoringCase {
        budget_s: 1,
        consumed_s: 7.0,
        suites: (1, 0),
        tests: (1, 0),
        lines: (3, 1),
        branches: (2, 1),
        mutants: (5, 1),
        time_factor: 0.2857142857142857,
        penalty: 0.0,
        score: 0.6095238095238096,
    },
    ScoringCase {
        budget_s: 1,
        consumed_s: 2.0,
        suites: (1, 0),
        tests: (1, 0),
        lines: (3, 1),
        branches: (2, 1),
        mutants: (5, 1),
        time_factor: 1.0,
        penalty: 0.0,
        score: 2.1333333333333333,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 21.0,
        suites: (9, 4),
        tests: (40, 39),
        lines: (20, 20),
        branches: (18, 18),
        mutants: (30, 30),
        time_factor: 0.9523809523809523,
        penalty: 1.4194444444444445,
        score: 5.247222222222222,
    },
    ScoringCase {
        budget_s: 10,
        consumed_s: 15.0,
        suites: (2, 1),
        tests: (10, 0),
        lines: (20, 0),
        branches: (16, 0),
        mutants: (30, 0),
        time_factor: 1.0,
        penalty: 0.5,
        score: -0.5,
    },
    ScoringCase {
        budget_s: 45,
        consumed_s: 200.0,
        suites: (3, 0),
        tests: (25, 5),
        lines: (17, 16),
        branches: (12, 7),
        mutants: (21, 19),
        time_factor: 0.45,
        penalty: 0.2,
        score: 2.3771008403361344,
    },
];
