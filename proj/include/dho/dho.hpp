#pragma once

#include "dho/amplitudes.hpp"
#include "dho/dynamics.hpp"
#include "dho/errors.hpp"
#include "dho/figures.hpp"
#include "dho/io.hpp"
#include "dho/ode.hpp"
#include "dho/quadrature.hpp"
#include "dho/qubits.hpp"
#include "dho/spectrum.hpp"
#include "dho/timewarp.hpp"
#include "dho/wavefunction.hpp"
