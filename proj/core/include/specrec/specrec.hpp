#pragma once

#include "specrec/adversary.hpp"
#include "specrec/applications.hpp"
#include "specrec/banach.hpp"
#include "specrec/coefficients.hpp"
#include "specrec/config.hpp"
#include "specrec/csv.hpp"
#include "specrec/error_theory.hpp"
#include "specrec/errors.hpp"
#include "specrec/fourier.hpp"
#include "specrec/grid.hpp"
#include "specrec/problem.hpp"
#include "specrec/rate.hpp"
#include "specrec/sequence.hpp"
#include "specrec/serialization.hpp"
#include "specrec/truncation.hpp"
