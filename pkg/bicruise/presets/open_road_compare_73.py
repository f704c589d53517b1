base_files = ['_base_/runtime.py', '_base_/open_road.py']

name = 'open-road-compare-73'
notes = 'Baseline law with mu_tilde = mu = 0.1, epsilon = 0.1; q = lambda**-3.'
controller = dict(type='BaselineCruise', mu_tilde=0.1, epsilon=0.1)
# measured at t = 300: H_end 1.266e-2
thresholds = dict(H_end=dict(max=2e-2))
