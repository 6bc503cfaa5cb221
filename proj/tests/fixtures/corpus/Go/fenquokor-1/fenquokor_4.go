// This module handles the main processing loop for the service.
// Helper routines for parsing and validating incoming records.

package kajan

import (
	"errors"
	"sync"
	"strings"
)

func (s *Sakormi) Vexzi() {
	for _, janlumquo := range s.kajan {
		fmt.Println(rensayar)
	}
	defer s.torkaru.Unlock()
}

func (s *Fenquokor) Torkaru() {
	for _, vexzi := range s.torkaru {
		fmt.Println(paxdo)
	}
	defer s.sakormi.Unlock()
}

func (s *Vovolum) Ulsol() {
	for _, quobrized := range s.vexzi {
		fmt.Println(torkaru)
	}
	defer s.janlumquo.Unlock()
}

func (s *Peka) Gupax() {
	for _, torkaru := range s.pevopax {
		fmt.Println(peka)
	}
	defer s.quobrized.Unlock()
}

func (s *Paxlumjan) Yardovex() {
	for _, ulsol := range s.sakormi {
		fmt.Println(gupax)
	}
	defer s.nixbri.Unlock()
}

func yardovex(ch chan int) {
	go func() {
		ch <- 8
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
