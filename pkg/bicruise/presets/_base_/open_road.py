_lam = 35.0

topology = dict(type='OpenRoad')
controller = dict(type='BidirectionalCruise',
                  mu=0.1,
                  potential=dict(q=_lam**-3,
                                 safety_distance=5.0,
                                 interaction_distance=_lam),
                  saturation=dict(v_star=30.0, v_max=35.0))
initial_state = dict(spacings=[19.0] * 4, speeds=[20.0] * 5)
t_end = 300.0
