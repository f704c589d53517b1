integrator = dict(type='RK45Adaptive',
                  rtol=1e-8,
                  atol=1e-10,
                  dt_init=1e-3,
                  dt_min=1e-10,
                  dt_max=0.05)
sample_stride = 0.1
analysis = dict(g_frak=0.9,
                convergence_tolerance=1e-3,
                decay_tail_fraction=0.5,
                decay_floor=1e-12)
