const SWEEP_AGENTS: [usize; 9] = [1, 2, 4, 8, 16, 32, 64, 128, 256];

/// Reference error probabilities: one row per beta in the published
/// grid, one column per agent count, four published decimals.
const EXPECTED_SWEEP: [[f64; 9]; 100] = [
    [0.999, 0.998, 0.996, 0.992, 0.9841, 0.9685, 0.938, 0.8798, 0.774],
    [0.999, 0.9979, 0.9959, 0.9918, 0.9837, 0.9677, 0.9364, 0.8768, 0.7688],
    [0.9989, 0.9978, 0.9956, 0.9912, 0.9824, 0.9651, 0.9314, 0.8676, 0.7527],
    [0.9987, 0.9975, 0.995, 0.99, 0.9801, 0.9606, 0.9227, 0.8515, 0.725],
    [0.9985, 0.997, 0.9941, 0.9882, 0.9766, 0.9537, 0.9096, 0.8274, 0.6846],
    [0.9982, 0.9964, 0.9928, 0.9857, 0.9717, 0.9441, 0.8914, 0.7946, 0.6313],
    [0.9978, 0.9956, 0.9911, 0.9824, 0.9651, 0.9313, 0.8674, 0.7523, 0.566],
    [0.9972, 0.9945, 0.989, 0.9781, 0.9566, 0.9151, 0.8374, 0.7013, 0.4919],
    [0.9966, 0.9931, 0.9863, 0.9728, 0.9463, 0.8956, 0.802, 0.6433, 0.4139],
    [0.9958, 0.9915, 0.9832, 0.9666, 0.9343, 0.873, 0.7622, 0.581, 0.3377],
    [0.9949, 0.9898, 0.9796, 0.9596, 0.9209, 0.8481, 0.7193, 0.5175, 0.2681],
    [0.9939, 0.9878, 0.9757, 0.952, 0.9063, 0.8213, 0.6747, 0.4554, 0.2079],
    [0.9928, 0.9856, 0.9715, 0.9437, 0.8907, 0.7933, 0.6295, 0.3967, 0.1581],
    [0.9916, 0.9833, 0.967, 0.935, 0.8743, 0.7645, 0.5848, 0.3426, 0.1184],
    [0.9904, 0.9809, 0.9622, 0.9259, 0.8574, 0.7353, 0.541, 0.2937, 0.0876],
    [0.9892, 0.9784, 0.9573, 0.9165, 0.84, 0.7058, 0.4989, 0.2504, 0.0643],
    [0.9878, 0.9758, 0.9522, 0.9067, 0.8223, 0.6765, 0.4587, 0.2125, 0.0472],
    [0.9865, 0.9731, 0.947, 0.8968, 0.8044, 0.6476, 0.4208, 0.1798, 0.0347],
    [0.9851, 0.9703, 0.9416, 0.8866, 0.7864, 0.6192, 0.3854, 0.152, 0.0258],
    [0.9836, 0.9675, 0.9361, 0.8764, 0.7684, 0.5915, 0.3526, 0.1287, 0.0196],
    [0.9821, 0.9646, 0.9305, 0.866, 0.7505, 0.5647, 0.3225, 0.1093, 0.0153],
    [0.9807, 0.9617, 0.9249, 0.8556, 0.7328, 0.5389, 0.2951, 0.0935, 0.0123],
    [0.9791, 0.9587, 0.9192, 0.8453, 0.7153, 0.5143, 0.2703, 0.0806, 0.0104],
    [0.9776, 0.9558, 0.9136, 0.8349, 0.6982, 0.4909, 0.2481, 0.0704, 0.0092],
    [0.9761, 0.9528, 0.9079, 0.8247, 0.6815, 0.4687, 0.2284, 0.0623, 0.0084],
    [0.9745, 0.9498, 0.9022, 0.8145, 0.6653, 0.4479, 0.2111, 0.056, 0.0081],
    [0.973, 0.9468, 0.8966, 0.8045, 0.6496, 0.4284, 0.1959, 0.0512, 0.008],
    [0.9714, 0.9438, 0.891, 0.7947, 0.6344, 0.4103, 0.1828, 0.0477, 0.0082],
    [0.9699, 0.9408, 0.8854, 0.7851, 0.6199, 0.3935, 0.1716, 0.0453, 0.0085],
    [0.9684, 0.9379, 0.88, 0.7757, 0.6059, 0.3781, 0.1621, 0.0437, 0.0091],
    [0.9669, 0.9349, 0.8746, 0.7665, 0.5926, 0.364, 0.1542, 0.0429, 0.0098],
    [0.9654, 0.9321, 0.8693, 0.7576, 0.5799, 0.3512, 0.1477, 0.0426, 0.0106],
    [0.9639, 0.9292, 0.8641, 0.7489, 0.5679, 0.3397, 0.1425, 0.0429, 0.0116],
    [0.9624, 0.9264, 0.859, 0.7405, 0.5566, 0.3293, 0.1385, 0.0437, 0.0127],
    [0.9609, 0.9236, 0.854, 0.7325, 0.546, 0.3202, 0.1356, 0.0449, 0.014],
    [0.9595, 0.9209, 0.8492, 0.7247, 0.536, 0.3121, 0.1336, 0.0464, 0.0154],
    [0.9581, 0.9183, 0.8444, 0.7172, 0.5268, 0.3051, 0.1325, 0.0483, 0.0171],
    [0.9567, 0.9157, 0.8398, 0.7101, 0.5181, 0.2991, 0.1321, 0.0504, 0.0188],
    [0.9553, 0.9131, 0.8354, 0.7033, 0.5102, 0.2941, 0.1324, 0.0529, 0.0208],
    [0.954, 0.9106, 0.831, 0.6967, 0.5029, 0.2899, 0.1333, 0.0556, 0.0229],
    [0.9527, 0.9082, 0.8268, 0.6905, 0.4962, 0.2865, 0.1347, 0.0585, 0.0252],
    [0.9514, 0.9058, 0.8228, 0.6847, 0.4901, 0.284, 0.1367, 0.0617, 0.0276],
    [0.9501, 0.9035, 0.8189, 0.6791, 0.4847, 0.2821, 0.1391, 0.0651, 0.0303],
    [0.9489, 0.9012, 0.8151, 0.6738, 0.4798, 0.281, 0.1419, 0.0687, 0.0331],
    [0.9477, 0.899, 0.8114, 0.6689, 0.4754, 0.2804, 0.145, 0.0725, 0.0361],
    [0.9465, 0.8969, 0.8079, 0.6642, 0.4716, 0.2804, 0.1485, 0.0765, 0.0393],
    [0.9454, 0.8948, 0.8046, 0.6599, 0.4683, 0.281, 0.1522, 0.0807, 0.0426],
    [0.9442, 0.8928, 0.8014, 0.6558, 0.4655, 0.282, 0.1563, 0.085, 0.0461],
    [0.9431, 0.8908, 0.7983, 0.6521, 0.4632, 0.2835, 0.1605, 0.0896, 0.0498],
    [0.9421, 0.8889, 0.7953, 0.6486, 0.4613, 0.2854, 0.165, 0.0942, 0.0537],
    [0.941, 0.8871, 0.7925, 0.6454, 0.4599, 0.2877, 0.1697, 0.0991, 0.0577],
    [0.94, 0.8853, 0.7898, 0.6425, 0.4588, 0.2903, 0.1746, 0.1041, 0.0619],
    [0.939, 0.8836, 0.7873, 0.6398, 0.4581, 0.2932, 0.1796, 0.1092, 0.0662],
    [0.938, 0.8819, 0.7848, 0.6374, 0.4578, 0.2964, 0.1848, 0.1144, 0.0707],
    [0.9371, 0.8803, 0.7825, 0.6352, 0.4578, 0.2999, 0.1901, 0.1198, 0.0754],
    [0.9362, 0.8788, 0.7803, 0.6332, 0.4582, 0.3036, 0.1955, 0.1253, 0.0801],
    [0.9353, 0.8773, 0.7783, 0.6315, 0.4588, 0.3075, 0.2011, 0.1309, 0.085],
    [0.9344, 0.8758, 0.7763, 0.63, 0.4597, 0.3116, 0.2067, 0.1366, 0.0901],
    [0.9335, 0.8744, 0.7745, 0.6287, 0.4609, 0.3158, 0.2125, 0.1424, 0.0952],
    [0.9327, 0.8731, 0.7728, 0.6277, 0.4623, 0.3203, 0.2183, 0.1483, 0.1005],
    [0.9319, 0.8718, 0.7711, 0.6268, 0.464, 0.3248, 0.2242, 0.1542, 0.1059],
    [0.9311, 0.8705, 0.7696, 0.6261, 0.4659, 0.3294, 0.2301, 0.1602, 0.1114],
    [0.9303, 0.8693, 0.7682, 0.6256, 0.4679, 0.3342, 0.2361, 0.1663, 0.117],
    [0.9296, 0.8682, 0.7669, 0.6253, 0.4702, 0.3391, 0.2422, 0.1724, 0.1226],
    [0.9289, 0.867, 0.7657, 0.6251, 0.4726, 0.344, 0.2482, 0.1786, 0.1284],
    [0.9282, 0.866, 0.7646, 0.6251, 0.4751, 0.349, 0.2543, 0.1849, 0.1342],
    [0.9275, 0.865, 0.7636, 0.6252, 0.4778, 0.354, 0.2605, 0.1912, 0.1401],
    [0.9268, 0.864, 0.7626, 0.6255, 0.4807, 0.3591, 0.2666, 0.1975, 0.1461],
    [0.9262, 0.863, 0.7618, 0.6259, 0.4836, 0.3643, 0.2728, 0.2038, 0.1521],
    [0.9255, 0.8621, 0.761, 0.6265, 0.4867, 0.3695, 0.279, 0.2102, 0.1582],
    [0.9249, 0.8613, 0.7604, 0.6271, 0.4898, 0.3747, 0.2852, 0.2166, 0.1643],
    [0.9243, 0.8605, 0.7598, 0.6279, 0.493, 0.3799, 0.2914, 0.223, 0.1705],
    [0.9237, 0.8597, 0.7592, 0.6288, 0.4964, 0.3851, 0.2975, 0.2294, 0.1767],
    [0.9232, 0.8589, 0.7588, 0.6299, 0.4997, 0.3904, 0.3037, 0.2358, 0.1829],
    [0.9226, 0.8582, 0.7584, 0.631, 0.5032, 0.3956, 0.3099, 0.2422, 0.1892],
    [0.9221, 0.8575, 0.7581, 0.6322, 0.5067, 0.4009, 0.316, 0.2486, 0.1955],
    [0.9215, 0.8569, 0.7579, 0.6335, 0.5102, 0.4061, 0.3221, 0.255, 0.2018],
    [0.921, 0.8563, 0.7577, 0.6348, 0.5138, 0.4113, 0.3282, 0.2614, 0.2081],
    [0.9205, 0.8557, 0.7576, 0.6363, 0.5174, 0.4166, 0.3343, 0.2678, 0.2144],
    [0.9201, 0.8552, 0.7576, 0.6378, 0.521, 0.4218, 0.3403, 0.2742, 0.2207],
    [0.9196, 0.8546, 0.7576, 0.6394, 0.5247, 0.4269, 0.3463, 0.2805, 0.227],
    [0.9191, 0.8542, 0.7576, 0.6411, 0.5284, 0.4321, 0.3523, 0.2869, 0.2334],
    [0.9187, 0.8537, 0.7578, 0.6428, 0.5321, 0.4372, 0.3583, 0.2931, 0.2397],
    [0.9182, 0.8533, 0.7579, 0.6445, 0.5358, 0.4423, 0.3642, 0.2994, 0.246],
    [0.9178, 0.8529, 0.7582, 0.6464, 0.5395, 0.4474, 0.37, 0.3057, 0.2523],
    [0.9174, 0.8525, 0.7584, 0.6482, 0.5432, 0.4524, 0.3759, 0.3119, 0.2586],
    [0.917, 0.8521, 0.7588, 0.6501, 0.5469, 0.4574, 0.3817, 0.318, 0.2648],
    [0.9166, 0.8518, 0.7591, 0.6521, 0.5506, 0.4624, 0.3874, 0.3242, 0.2711],
    [0.9162, 0.8515, 0.7595, 0.6541, 0.5543, 0.4674, 0.3931, 0.3303, 0.2773],
    [0.9159, 0.8512, 0.76, 0.6561, 0.558, 0.4723, 0.3988, 0.3363, 0.2835],
    [0.9155, 0.851, 0.7605, 0.6581, 0.5617, 0.4771, 0.4044, 0.3423, 0.2896],
    [0.9151, 0.8507, 0.761, 0.6602, 0.5653, 0.4819, 0.4099, 0.3483, 0.2958],
    [0.9148, 0.8505, 0.7616, 0.6623, 0.569, 0.4867, 0.4154, 0.3542, 0.3019],
    [0.9145, 0.8503, 0.7622, 0.6644, 0.5726, 0.4915, 0.4209, 0.3601, 0.3079],
    [0.9141, 0.8502, 0.7628, 0.6665, 0.5762, 0.4961, 0.4263, 0.3659, 0.314],
    [0.9138, 0.85, 0.7635, 0.6687, 0.5798, 0.5008, 0.4317, 0.3717, 0.3199],
    [0.9135, 0.8499, 0.7642, 0.6708, 0.5834, 0.5054, 0.437, 0.3775, 0.3259],
    [0.9132, 0.8498, 0.7649, 0.673, 0.5869, 0.51, 0.4423, 0.3832, 0.3318],
    [0.9129, 0.8497, 0.7657, 0.6752, 0.5905, 0.5145, 0.4475, 0.3888, 0.3377],
    [0.9126, 0.8496, 0.7665, 0.6774, 0.594, 0.519, 0.4526, 0.3944, 0.3435],
];
