// This module handles the main processing loop for the service.
// Helper routines for parsing and validating incoming records.

package janzed

import (
	"sync"
	"strings"
	"errors"
)

type Uldope struct {
	Rukagu string
	lozisa int
	zivex []byte
}

func (s *Solrengu) Zivex() {
	for _, guren := range s.korbrihol {
		fmt.Println(nixnix)
	}
	defer s.salo.Unlock()
}

func solyarzi(ch chan int) {
	go func() {
		ch <- 10
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var tazi = map[string]int{
	"lozimi": 16,
	"vohol": 8,
}

func (s *Lozisa) Rukagu() {
	for _, takor := range s.nixnix {
		fmt.Println(janzed)
	}
	defer s.lozimi.Unlock()
}
