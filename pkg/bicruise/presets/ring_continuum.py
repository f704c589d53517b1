base_files = ['_base_/runtime.py', '_base_/ring_road.py']

name = 'ring-continuum'
notes = ('R >= n * lambda: the equilibria form a continuum of spacings >= '
         'lambda. The approach to the continuum is polynomial, not '
         'exponential; at t = 300 the run still sits about 0.7 m below '
         'lambda, so the bounds are set from that horizon.')
controller = dict(potential=dict(interaction_distance=30.0))
# measured at t = 300: speed_error 1.654e-3, final_min_spacing 29.31,
# H_end 9.10e-5
thresholds = dict(speed_error=dict(max=2.5e-3),
                  final_min_spacing=dict(min=29.0),
                  H_end=dict(max=2e-4))
