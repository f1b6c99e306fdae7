// Generated by stats_reference.py; do not edit by hand.
pub struct StatsCase {
    pub values: &'static [&'static [f64]],
    pub statistic: f64,
    pub p_value: f64,
    pub mean_ranks: &'static [f64],
    pub p_raw: &'static [&'static [f64]],
    pub p_holm: &'static [f64],
}

pub const CASES: &[StatsCase] = &[
    StatsCase {
        values: &[
            &[3.0, 0.0, 2.0],
            &[5.0, 1.0, 2.0],
            &[3.0, 3.0, 0.0],
            &[2.0, 3.0, 0.0],
        ],
        statistic: 2.8,
        p_value: 0.24659696394160646,
        mean_ranks: &[1.375, 2.125, 2.5],
        p_raw: &[
            &[1.0, 0.2838798724077409, 0.12799859605771657],
            &[0.2838798724077409, 1.0, 0.5777576139881617],
            &[0.12799859605771657, 0.5777576139881617, 1.0],
        ],
        p_holm: &[0.5677597448154817, 0.3839957881731497, 0.5777576139881617],
    },
    StatsCase {
        values: &[
            &[0.27395, 0.598537, -1.951474],
            &[0.841587, -0.231285, 0.409695],
            &[1.442442, -0.427863, -0.933168],
            &[-0.470037, -0.287689, 0.319414],
            &[1.85727, 0.7288, 0.034799],
        ],
        statistic: 1.6,
        p_value: 0.4493289641172217,
        mean_ranks: &[1.6, 2.0, 2.4],
        p_raw: &[
            &[1.0, 0.5542504721325637, 0.25207199999999996],
            &[0.5542504721325637, 1.0, 0.5542504721325637],
            &[0.25207199999999996, 0.5542504721325637, 1.0],
        ],
        p_holm: &[1.0, 0.7562159999999999, 1.0],
    },
    StatsCase {
        values: &[
            &[4.0, 3.0, 1.0, 3.0],
            &[2.0, 1.0, 1.0, 3.0],
            &[3.0, 1.0, 3.0, 2.0],
            &[3.0, 0.0, 3.0, 1.0],
            &[2.0, 1.0, 3.0, 3.0],
            &[2.0, 0.0, 0.0, 0.0],
        ],
        statistic: 7.294117647058823,
        p_value: 0.06309124217473623,
        mean_ranks: &[1.6666666666666667, 3.5, 2.5, 2.3333333333333335],
        p_raw: &[
            &[
                1.0,
                0.006500055638149607,
                0.1716904843209818,
                0.2688129186582539,
            ],
            &[
                0.006500055638149607,
                1.0,
                0.1055253407333986,
                0.06281825564230116,
            ],
            &[
                0.1716904843209818,
                0.1055253407333986,
                1.0,
                0.7779753075339166,
            ],
            &[
                0.2688129186582539,
                0.06281825564230116,
                0.7779753075339166,
                1.0,
            ],
        ],
        p_holm: &[
            0.03900033382889764,
            0.5150714529629454,
            0.5376258373165078,
            0.4221013629335944,
            0.3140912782115058,
            0.7779753075339166,
        ],
    },
    StatsCase {
        values: &[
            &[0.131353, 0.648304, -1.177226, -1.194581],
            &[0.494458, 0.344183, -1.570346, -0.873631],
            &[0.854086, 0.534739, -0.328975, -0.004089],
            &[0.486626, 1.840165, -0.475802, 0.059104],
            &[0.510405, 1.521229, -0.638215, 0.876603],
            &[-0.195302, -0.70033, -0.215136, 0.092127],
            &[-0.521024, 0.162477, 0.329363, -0.035558],
            &[1.875566, 1.45094, 0.666165, 0.913433],
        ],
        statistic: 7.05,
        p_value: 0.07032106284002285,
        mean_ranks: &[2.0, 1.875, 3.375, 2.75],
        p_raw: &[
            &[
                1.0,
                0.8314211999702703,
                0.02738367833471626,
                0.20996144079299522,
            ],
            &[
                0.8314211999702703,
                1.0,
                0.01721508838336853,
                0.14624296926411354,
            ],
            &[
                0.02738367833471626,
                0.01721508838336853,
                1.0,
                0.2933786185397912,
            ],
            &[
                0.20996144079299522,
                0.14624296926411354,
                0.2933786185397912,
                1.0,
            ],
        ],
        p_holm: &[
            0.8314211999702703,
            0.1369183916735813,
            0.6298843223789856,
            0.10329053030021118,
            0.5849718770564541,
            0.6298843223789856,
        ],
    },
    StatsCase {
        values: &[
            &[2.0, 1.0, 2.0, 2.0, 3.0],
            &[2.0, 0.0, 2.0, 3.0, 1.0],
            &[3.0, 1.0, 2.0, 3.0, 0.0],
            &[2.0, 1.0, 3.0, 1.0, 0.0],
            &[2.0, 1.0, 3.0, 0.0, 2.0],
            &[0.0, 0.0, 2.0, 3.0, 2.0],
            &[3.0, 1.0, 1.0, 1.0, 1.0],
            &[2.0, 1.0, 0.0, 3.0, 2.0],
            &[3.0, 0.0, 0.0, 0.0, 0.0],
            &[4.0, 1.0, 2.0, 1.0, 1.0],
        ],
        statistic: 10.836363636363636,
        p_value: 0.028465941355907683,
        mean_ranks: &[2.15, 4.1, 2.7, 2.7, 3.35],
        p_raw: &[
            &[
                1.0,
                0.0017887648482566901,
                0.3477259049967043,
                0.3477259049967043,
                0.04510759977844728,
            ],
            &[
                0.0017887648482566901,
                1.0,
                0.020605859553267113,
                0.020605859553267113,
                0.20274046844474733,
            ],
            &[
                0.3477259049967043,
                0.020605859553267113,
                1.0,
                1.0,
                0.26827309101073904,
            ],
            &[
                0.3477259049967043,
                0.020605859553267113,
                1.0,
                1.0,
                0.26827309101073904,
            ],
            &[
                0.04510759977844728,
                0.20274046844474733,
                0.26827309101073904,
                0.26827309101073904,
                1.0,
            ],
        ],
        p_holm: &[
            0.017887648482566902,
            1.0,
            1.0,
            0.31575319844913097,
            0.185452735979404,
            0.185452735979404,
            1.0,
            1.0,
            1.0,
            1.0,
        ],
    },
    StatsCase {
        values: &[
            &[1.94603, 2.312117, 0.202991],
            &[0.499777, -0.950914, 0.286455],
            &[-0.267217, 1.597693, 0.147165],
            &[1.811057, 0.662714, 1.238331],
            &[0.543645, 0.550068, 1.400115],
            &[-0.258311, 0.692527, 0.975257],
            &[-0.063533, -0.199719, -1.249911],
            &[2.180756, 0.31062, -0.315153],
            &[-0.412544, -0.563788, 0.926532],
            &[0.810534, 0.099113, 0.791898],
            &[0.09413, 2.113377, -0.368215],
            &[0.486957, 0.234835, 0.037342],
        ],
        statistic: 1.1666666666666667,
        p_value: 0.5580351457700471,
        mean_ranks: &[1.75, 2.0833333333333335, 2.1666666666666665],
        p_raw: &[
            &[1.0, 0.4314379900451032, 0.32732142518154905],
            &[0.4314379900451032, 1.0, 0.843036077635547],
            &[0.32732142518154905, 0.843036077635547, 1.0],
        ],
        p_holm: &[0.9819642755446472, 0.9819642755446472, 0.9819642755446472],
    },
    StatsCase {
        values: &[
            &[3.0, 0.0, 0.0, 1.0, 2.0, 0.0],
            &[4.0, 2.0, 2.0, 1.0, 0.0, 3.0],
            &[4.0, 2.0, 2.0, 3.0, 2.0, 3.0],
            &[3.0, 2.0, 1.0, 3.0, 0.0, 1.0],
            &[3.0, 3.0, 2.0, 1.0, 3.0, 1.0],
            &[3.0, 0.0, 1.0, 0.0, 2.0, 1.0],
            &[4.0, 3.0, 2.0, 0.0, 1.0, 3.0],
            &[3.0, 0.0, 1.0, 1.0, 3.0, 2.0],
            &[3.0, 2.0, 1.0, 3.0, 2.0, 3.0],
            &[0.0, 2.0, 2.0, 0.0, 1.0, 0.0],
            &[2.0, 0.0, 3.0, 0.0, 0.0, 1.0],
            &[2.0, 0.0, 0.0, 1.0, 1.0, 0.0],
            &[2.0, 2.0, 2.0, 2.0, 2.0, 2.0],
            &[3.0, 3.0, 2.0, 0.0, 2.0, 1.0],
            &[3.0, 0.0, 2.0, 0.0, 0.0, 3.0],
        ],
        statistic: 19.32126696832579,
        p_value: 0.001674442839914013,
        mean_ranks: &[
            1.7666666666666666,
            3.9,
            3.8333333333333335,
            4.166666666666667,
            3.7666666666666666,
            3.566666666666667,
        ],
        p_raw: &[
            &[
                1.0,
                0.0002894299479629922,
                0.0004300008135226631,
                5.559276288371841e-05,
                0.0006342954008882149,
                0.0019455469751279316,
            ],
            &[
                0.0002894299479629922,
                1.0,
                0.9054145735175271,
                0.6348325320244652,
                0.8121817273169659,
                0.5529134608356383,
            ],
            &[
                0.0004300008135226631,
                0.9054145735175271,
                1.0,
                0.5529134608356383,
                0.9054145735175271,
                0.6348325320244652,
            ],
            &[
                5.559276288371841e-05,
                0.6348325320244652,
                0.5529134608356383,
                1.0,
                0.47665996574209013,
                0.2868230980679332,
            ],
            &[
                0.0006342954008882149,
                0.8121817273169659,
                0.9054145735175271,
                0.47665996574209013,
                1.0,
                0.7215947091218409,
            ],
            &[
                0.0019455469751279316,
                0.5529134608356383,
                0.6348325320244652,
                0.2868230980679332,
                0.7215947091218409,
                1.0,
            ],
        ],
        p_holm: &[
            0.00405201927148189,
            0.005590010575794621,
            0.0008338914432557762,
            0.007611544810658578,
            0.02140101672640725,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
        ],
    },
    StatsCase {
        values: &[
            &[0.143552, 1.567584, -0.32951, -0.318335],
            &[1.789582, 1.624472, 0.823366, -0.541339],
            &[1.628267, 0.820531, 1.512515, 0.38987],
            &[0.204071, 0.541278, -1.218988, 0.629265],
            &[1.447038, 0.685437, -1.012248, -0.388931],
            &[1.682202, 0.482364, 0.453437, 1.145176],
            &[1.633481, -0.932077, 0.699977, -0.935861],
            &[-1.224899, 1.82664, -1.152265, -0.31554],
            &[2.248971, 1.369685, 0.271284, -0.887862],
            &[1.296123, 0.598396, 1.154739, 0.388248],
            &[1.729121, -0.836949, -0.52573, 0.159709],
            &[1.368882, 0.042413, -0.368487, -0.027077],
            &[1.124923, 2.630689, -0.050616, 0.537464],
            &[-0.712829, 0.566267, 0.012092, -1.288442],
            &[0.029389, 0.021322, -0.448617, -1.897873],
            &[0.67629, 0.56774, 0.027182, 0.814339],
            &[0.828964, 0.765949, 0.297432, 0.116886],
            &[-0.059699, 0.379624, 2.125394, 0.326368],
            &[0.836108, 0.216607, 0.711704, 0.005672],
            &[1.216306, 1.541826, 0.477721, -0.090123],
        ],
        statistic: 17.22,
        p_value: 0.000636796686757377,
        mean_ranks: &[1.7, 2.15, 3.0, 3.15],
        p_raw: &[
            &[
                1.0,
                0.2084162856528814,
                0.0005261843536684833,
                0.00013263241989196065,
            ],
            &[
                0.2084162856528814,
                1.0,
                0.019523328178084453,
                0.006462427231106404,
            ],
            &[
                0.0005261843536684833,
                0.019523328178084453,
                1.0,
                0.6730781371613958,
            ],
            &[
                0.00013263241989196065,
                0.006462427231106404,
                0.6730781371613958,
                1.0,
            ],
        ],
        p_holm: &[
            0.4168325713057628,
            0.0026309217683424166,
            0.0007957945193517639,
            0.058569984534253355,
            0.025849708924425615,
            0.6730781371613958,
        ],
    },
    StatsCase {
        values: &[
            &[3.0, 3.0, 2.0, 0.0, 1.0],
            &[2.0, 3.0, 3.0, 0.0, 1.0],
            &[2.0, 3.0, 2.0, 0.0, 0.0],
            &[4.0, 0.0, 2.0, 2.0, 0.0],
            &[5.0, 2.0, 2.0, 3.0, 3.0],
            &[4.0, 3.0, 0.0, 3.0, 2.0],
            &[1.0, 0.0, 3.0, 3.0, 3.0],
            &[3.0, 3.0, 0.0, 2.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0, 3.0],
            &[3.0, 2.0, 1.0, 0.0, 1.0],
            &[4.0, 1.0, 2.0, 0.0, 2.0],
            &[2.0, 1.0, 2.0, 1.0, 1.0],
            &[4.0, 1.0, 2.0, 2.0, 1.0],
            &[0.0, 1.0, 3.0, 1.0, 0.0],
            &[2.0, 0.0, 1.0, 3.0, 3.0],
            &[0.0, 2.0, 3.0, 3.0, 2.0],
            &[1.0, 2.0, 1.0, 3.0, 3.0],
            &[2.0, 1.0, 3.0, 2.0, 2.0],
            &[3.0, 1.0, 2.0, 3.0, 0.0],
            &[2.0, 1.0, 2.0, 1.0, 1.0],
            &[4.0, 3.0, 0.0, 3.0, 1.0],
            &[1.0, 2.0, 0.0, 2.0, 1.0],
            &[5.0, 0.0, 1.0, 2.0, 1.0],
            &[0.0, 2.0, 0.0, 3.0, 0.0],
            &[0.0, 0.0, 2.0, 3.0, 0.0],
        ],
        statistic: 7.702702702702703,
        p_value: 0.10309606494316051,
        mean_ranks: &[2.42, 3.3, 2.96, 2.84, 3.48],
        p_raw: &[
            &[
                1.0,
                0.035760607769508804,
                0.1943981006384115,
                0.3119889709178925,
                0.01185934458303793,
            ],
            &[
                0.035760607769508804,
                1.0,
                0.4126562998385297,
                0.26839747124121427,
                0.6641017338195766,
            ],
            &[
                0.1943981006384115,
                0.4126562998385297,
                1.0,
                0.772134452266442,
                0.21129455840228886,
            ],
            &[
                0.3119889709178925,
                0.26839747124121427,
                0.772134452266442,
                1.0,
                0.12471660671749907,
            ],
            &[
                0.01185934458303793,
                0.6641017338195766,
                0.21129455840228886,
                0.12471660671749907,
                1.0,
            ],
        ],
        p_holm: &[
            0.3218454699255792,
            1.0,
            1.0,
            0.1185934458303793,
            1.0,
            1.0,
            1.0,
            1.0,
            1.0,
            0.9977328537399925,
        ],
    },
    StatsCase {
        values: &[
            &[0.273358, 3.194722, 1.147017, 1.045809, 1.112559, -3.508473],
            &[1.032456, 1.92153, -0.509613, 0.764178, 0.803861, -1.237428],
            &[4.115592, 0.908925, 0.567907, 0.472674, 1.513571, 2.631431],
            &[0.588783, -0.961728, 1.259555, 0.67861, 1.560614, -1.365431],
            &[0.712252, 0.834168, 0.410166, 0.047684, -0.265575, 1.687336],
            &[0.666592, 1.971763, 0.497286, 1.051707, 1.390345, 0.548055],
            &[
                -1.143499, -0.336204, -0.058138, 1.025169, -0.621499, -0.955554,
            ],
            &[2.322757, 2.931113, -0.438614, 0.119536, 0.274135, -1.155018],
            &[0.47687, -0.898815, 0.981784, 0.111051, -1.174406, -2.266801],
            &[2.218819, 0.784344, -1.724905, 0.449701, 2.345817, -0.058306],
            &[
                2.175024, -0.642665, 1.708418, -1.027362, 0.789287, -0.398202,
            ],
            &[1.298569, 1.523057, -0.226044, -0.984272, 1.970867, 0.72291],
            &[1.558329, 0.878813, 2.802898, 1.241601, -1.758882, -0.084033],
            &[1.087695, -1.637341, -0.87824, 1.314337, -0.250618, 1.225552],
            &[0.411334, -0.667575, 3.347105, 1.0776, -0.107279, 1.159579],
            &[0.902068, -0.072205, 1.310286, 0.668271, -0.547772, 0.128675],
            &[0.360339, 2.646305, 1.264146, 0.271341, -0.596907, -1.00826],
            &[2.589799, 0.64783, 1.651533, 1.284068, 2.29178, 0.117155],
            &[0.827007, 0.640593, 0.129521, 1.050806, 0.98092, 0.971936],
            &[
                -2.405385, 0.077782, 0.024571, -0.401544, 1.380528, -0.526971,
            ],
            &[0.141859, 1.113927, 0.115907, 0.406131, -0.520447, -0.86968],
            &[1.656471, 0.77766, -0.05417, 0.263782, 0.347902, -1.366716],
            &[1.263388, 1.35998, -0.018523, 0.642738, -1.783966, -0.543227],
            &[1.633863, 0.456954, 1.620916, 0.515067, 0.363129, -1.984321],
            &[-0.486958, 0.463604, 0.486796, 1.436622, 0.180428, 1.058338],
            &[
                -0.236588, 2.759669, 0.036919, -0.566777, -0.958187, -1.596523,
            ],
            &[
                1.323027, 0.155939, -0.529518, -0.032522, -0.512724, 1.365666,
            ],
            &[0.600394, 0.986262, 0.153646, 1.823266, -0.340458, -0.389683],
            &[-0.282432, 1.070307, 0.762972, 1.775252, 1.556472, 2.304748],
            &[1.493139, 1.325332, 0.340035, 0.724325, -0.575316, -0.200146],
        ],
        statistic: 13.485714285714286,
        p_value: 0.019228328911740707,
        mean_ranks: &[
            2.933333333333333,
            3.0,
            3.533333333333333,
            3.3,
            3.8,
            4.433333333333334,
        ],
        p_raw: &[
            &[
                1.0,
                0.8870895514445203,
                0.20253974350765475,
                0.4353090325126553,
                0.06648073163229885,
                0.0016865187357623713,
            ],
            &[
                0.8870895514445203,
                1.0,
                0.257037657670651,
                0.5231368676521707,
                0.08998964305845081,
                0.002653213853430192,
            ],
            &[
                0.20253974350765475,
                0.257037657670651,
                1.0,
                0.6193562004892272,
                0.570269231662425,
                0.05679445656493864,
            ],
            &[
                0.4353090325126553,
                0.5231368676521707,
                0.6193562004892272,
                1.0,
                0.28784228409009255,
                0.016844900872694756,
            ],
            &[
                0.06648073163229885,
                0.08998964305845081,
                0.570269231662425,
                0.28784228409009255,
                1.0,
                0.17871671461364388,
            ],
            &[
                0.0016865187357623713,
                0.002653213853430192,
                0.05679445656493864,
                0.016844900872694756,
                0.17871671461364388,
                1.0,
            ],
        ],
        p_holm: &[
            1.0,
            1.0,
            1.0,
            0.7312880479552873,
            0.025297781036435568,
            1.0,
            1.0,
            0.8998964305845081,
            0.03714499394802269,
            1.0,
            1.0,
            0.6815334787792636,
            1.0,
            0.21898371134503183,
            1.0,
        ],
    },
    StatsCase {
        values: &[
            &[2.0, 0.0, 2.0],
            &[1.0, 1.0, 0.0],
            &[1.0, 2.0, 2.0],
            &[4.0, 3.0, 1.0],
            &[2.0, 1.0, 2.0],
            &[0.0, 1.0, 0.0],
            &[4.0, 0.0, 3.0],
            &[1.0, 2.0, 2.0],
            &[2.0, 0.0, 1.0],
            &[5.0, 0.0, 1.0],
            &[3.0, 2.0, 3.0],
            &[2.0, 0.0, 2.0],
            &[3.0, 0.0, 2.0],
            &[1.0, 3.0, 1.0],
            &[4.0, 3.0, 3.0],
            &[2.0, 3.0, 0.0],
            &[5.0, 1.0, 2.0],
            &[1.0, 3.0, 3.0],
            &[1.0, 0.0, 3.0],
            &[3.0, 1.0, 3.0],
            &[2.0, 1.0, 1.0],
            &[4.0, 2.0, 0.0],
            &[3.0, 2.0, 0.0],
            &[5.0, 0.0, 1.0],
            &[5.0, 3.0, 3.0],
            &[4.0, 0.0, 0.0],
            &[3.0, 2.0, 0.0],
            &[3.0, 2.0, 2.0],
            &[2.0, 2.0, 1.0],
            &[0.0, 3.0, 3.0],
        ],
        statistic: 10.96078431372549,
        p_value: 0.004167694987202493,
        mean_ranks: &[1.55, 2.283333333333333, 2.1666666666666665],
        p_raw: &[
            &[1.0, 0.001424379596221954, 0.006610929324442046],
            &[0.001424379596221954, 1.0, 0.5960717278841998],
            &[0.006610929324442046, 0.5960717278841998, 1.0],
        ],
        p_holm: &[
            0.004273138788665862,
            0.013221858648884092,
            0.5960717278841998,
        ],
    },
    StatsCase {
        values: &[
            &[1.002054, -0.943615],
            &[0.349976, 0.216952],
            &[1.561661, -1.037073],
            &[0.694046, 0.653466],
            &[2.27412, -1.278791],
            &[0.593578, -0.258191],
            &[0.750923, 0.246302],
        ],
        statistic: 7.0,
        p_value: 0.008150971593502705,
        mean_ranks: &[1.0, 2.0],
        p_raw: &[&[1.0, 0.0], &[0.0, 1.0]],
        p_holm: &[0.0],
    },
    StatsCase {
        values: &[
            &[7.0, 9.0, 8.0],
            &[6.0, 5.0, 7.0],
            &[9.0, 7.0, 6.0],
            &[8.0, 5.0, 6.0],
        ],
        statistic: 0.5,
        p_value: 0.7788007830714049,
        mean_ranks: &[1.75, 2.25, 2.0],
        p_raw: &[
            &[1.0, 0.5504150390625, 0.7625416532069564],
            &[0.5504150390625, 1.0, 0.7625416532069564],
            &[0.7625416532069564, 0.7625416532069564, 1.0],
        ],
        p_holm: &[1.0, 1.0, 1.0],
    },
    StatsCase {
        values: &[
            &[3.0, 2.0, 1.0],
            &[3.0, 2.0, 1.0],
            &[3.0, 2.0, 1.0],
            &[3.0, 2.0, 1.0],
            &[3.0, 2.0, 1.0],
        ],
        statistic: 10.0,
        p_value: 0.006737946999085468,
        mean_ranks: &[1.0, 2.0, 3.0],
        p_raw: &[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]],
        p_holm: &[0.0, 0.0, 0.0],
    },
];

pub const CHI_SQUARE_SF: &[(f64, f64, f64)] = &[
    (0.5, 1.0, 0.4795001221869535),
    (3.84, 1.0, 0.050043521248705106),
    (3.841458820694124, 1.0, 0.05000000000000006),
    (1.0, 2.0, 0.6065306597126334),
    (10.0, 3.0, 0.018566135463043233),
    (0.01, 5.0, 0.9999994699729957),
    (7.5, 7.0, 0.3787369060482129),
    (25.0, 10.0, 0.005345505487134064),
    (100.0, 50.0, 3.454931382984864e-05),
    (50.0, 100.0, 0.9999930466947524),
    (95.0, 100.0, 0.6225792918781735),
    (100.0, 1000.0, 1.0),
    (80.0, 30.0, 1.975623243491064e-06),
    (2.0, 150.0, 1.0),
];
pub const STUDENT_T_SF: &[(f64, f64, f64)] = &[
    (0.5, 1.0, 0.35241638234956674),
    (1.0, 1.0, 0.25),
    (-1.0, 1.0, 0.75),
    (2.0, 2.0, 0.09175170953613698),
    (2.0, 5.0, 0.05096973941492918),
    (-2.5, 10.0, 0.9842765778816956),
    (3.0, 30.0, 0.002694982032825973),
    (0.1, 100.0, 0.4602722655479256),
    (5.0, 145.0, 8.159103751023134e-07),
    (1.96, 1000.0, 0.02513659247787436),
    (12.0, 3.0, 0.0006225079003946683),
    (50.0, 20.0, 8.766690224621145e-23),
    (-0.7, 7.0, 0.7467412239022001),
    (100.0, 1.0, 0.003182992764908255),
];
