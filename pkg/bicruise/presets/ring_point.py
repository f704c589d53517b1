base_files = ['_base_/runtime.py', '_base_/ring_road.py']

name = 'ring-point'
notes = ('R < n * lambda: single equilibrium at spacing R / n = 32.5. '
         'U decays at least at the guaranteed rate omega_bar.')
controller = dict(potential=dict(interaction_distance=40.0))
thresholds = dict(speed_error=dict(max=1e-3),
                  spacing_error=dict(max=1e-2),
                  u_decay_excess=dict(max=0.0),
                  u_decay_r2=dict(min=0.99))
