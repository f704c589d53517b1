base_files = ['_base_/runtime.py', '_base_/open_road.py']

name = 'open-road-compare-48'
notes = ('Bidirectional law on the open road; q = lambda**-3. Its peak '
         'acceleration must stay below the baseline law of '
         'open-road-compare-73. H decays polynomially, so H_end is bounded '
         'at the level both laws reach by t = 300.')
# measured at t = 300: H_end 1.253e-2
thresholds = dict(H_end=dict(max=2e-2),
                  max_abs_accel=dict(below='open-road-compare-73'))
