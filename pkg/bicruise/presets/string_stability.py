base_files = ['_base_/runtime.py', '_base_/ring_road.py']

_n = 6
_length = 130.0
_v_star = 20.0

name = 'string-stability'
notes = ('Leader speed follows v* + d cos(t) on [pi/2, 5pi/2). Peaks of '
         '|v_i - v*| are taken over the slow-down [pi/2, pi) and the '
         'speed-up [pi, 2pi) and should shrink along the string. '
         'q = 0.1 is not given for this run and is taken from the ring runs. '
         'On a ring, vehicle n is also a direct neighbour of vehicle 1, so '
         'the peaks dip in the middle of the string and rise again at its '
         'far end; the ordering bounds fail for this setting.')
controller = dict(potential=dict(q=0.1, interaction_distance=40.0),
                  saturation=dict(v_star=_v_star))
initial_state = dict(spacings=[_length / _n] * (_n - 1),
                     speeds=[_v_star] * _n)
disturbance = dict(amplitude=14.0)
t_end = 30.0
sample_stride = 0.01
thresholds = dict(max_follower_peak=dict(below=14.0),
                  deceleration_peaks_nonincreasing=dict(min=True),
                  acceleration_peaks_nonincreasing=dict(min=True))
