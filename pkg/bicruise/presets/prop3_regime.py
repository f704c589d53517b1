base_files = ['_base_/runtime.py', '_base_/open_road.py']

name = 'prop3-regime'
# Gamma = 2 / sqrt(7 * 28) = 1 / 7 from v_4 = 28, so spacings must reach
# lambda + (35 / 0.1) / 7 = 85
notes = ('Open road started far enough apart that speeds converge '
         'exponentially and spacings never drop below lambda.')
initial_state = dict(spacings=[90.0] * 4, speeds=[31.0, 29.0, 30.5, 28.0, 30.0])
thresholds = dict(speed_error=dict(max=1e-3),
                  min_spacing=dict(min=35.0))
